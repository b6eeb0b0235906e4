#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rightsize/errors.hpp"
#include "rightsize/instance.hpp"

namespace rightsize::io {

// Malformed instance or schedule text.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Instance document (JSON):
///   {"T": 2, "d": 1, "beta": [2.0], "fleet": [3] | [[3], [2]],
///    "lambda": [1.0, 0.5],
///    "cost_functions": [{"form": "affine", "a": 1, "b": 0.5, "z_max": 1}] | T x d nested}
/// Cost function fields: affine {a, b, z_max}, power {a, b, p, z_max},
/// piecewise {breakpoints: [[z, f], ...], z_max}. Unknown fields are rejected.
ProblemInstance parse_instance(std::string_view text);
ProblemInstance read_instance(const std::filesystem::path& path);
std::string instance_to_json(const ProblemInstance& instance);

/// Schedule CSV: header `t,x_1,...,x_d,operating,switching`, one row per slot
/// (1-based t, costs with nine decimals), then `# operating_total=...` style
/// summary comments.
std::string schedule_to_csv(const Schedule& schedule, const CostBreakdown& cost);
// Reads the configurations back; comment lines are skipped.
Schedule parse_schedule_csv(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace rightsize::io
