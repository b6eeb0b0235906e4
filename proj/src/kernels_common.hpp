#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "rightsize/grid.hpp"

namespace rightsize::kernels::detail {

// Lines along axis j: every start index with position 0 on that axis.
inline std::size_t line_count(const ConfigGrid& grid, std::size_t j) { return grid.size() / grid.axis(j).size(); }

inline std::size_t line_start(const ConfigGrid& grid, std::size_t j, std::size_t line) {
  const std::size_t stride = grid.stride(j);
  return (line / stride) * stride * grid.axis(j).size() + line % stride;
}

// Candidate wins on a strictly smaller value, or an equal value reached from
// a lexicographically smaller configuration.
inline bool better(double cand, std::uint32_t cand_arg, double cur, std::uint32_t cur_arg) {
  return cand < cur || (cand == cur && cand_arg < cur_arg);
}

inline void relax_up_line(LayerValueTable& table, std::span<const int> axis, std::size_t start, std::size_t stride,
                          double beta) {
  double* values = table.values.data();
  std::uint32_t* arg = table.argmin.data();
  for (std::size_t i = 1; i < axis.size(); ++i) {
    const std::size_t idx = start + i * stride;
    const std::size_t prev = idx - stride;
    const double cand = values[prev] + beta * static_cast<double>(axis[i] - axis[i - 1]);
    if (better(cand, arg[prev], values[idx], arg[idx])) {
      values[idx] = cand;
      arg[idx] = arg[prev];
    }
  }
}

inline void relax_down_line(LayerValueTable& table, std::size_t length, std::size_t start, std::size_t stride) {
  double* values = table.values.data();
  std::uint32_t* arg = table.argmin.data();
  for (std::size_t i = length - 1; i-- > 0;) {
    const std::size_t idx = start + i * stride;
    const std::size_t next = idx + stride;
    if (better(values[next], arg[next], values[idx], arg[idx])) {
      values[idx] = values[next];
      arg[idx] = arg[next];
    }
  }
}

}  // namespace rightsize::kernels::detail
