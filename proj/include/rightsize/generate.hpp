#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "rightsize/instance.hpp"

namespace rightsize {

// Seeded source of uniforms. The conversion from raw bits is spelled out so
// that the same seed gives the same numbers with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class LoadProfile { sinusoidal, bursty, constant };

LoadProfile parse_profile(const std::string& name);
std::string to_string(LoadProfile profile);

struct GenOptions {
  int horizon = 24;
  int types = 2;
  int fleet = 4;  // m_j for every type
  std::uint64_t seed = 1;
  LoadProfile profile = LoadProfile::sinusoidal;
  // Per-slot costs: idle cost follows a day/night price factor.
  bool time_dependent = false;
};

/// Synthetic trace. Types alternate between affine and power costs with
/// seeded parameters; the load stays within 90% of the fleet capacity.
ProblemInstance generate_instance(const GenOptions& options);

struct TinyOptions {
  int max_horizon = 4;
  int max_types = 2;
  int max_fleet = 2;
  bool time_dependent = false;
  bool load_independent = false;  // f_j(z) = l_j on [0, z_max]
  bool vary_fleet = false;        // per-slot m_{t,j} in [0, max_fleet]
};

// Random affine, power or piecewise cost (constant when `load_independent`),
// idle cost 0 with probability 0.15.
CostFunction random_cost_function(Rng& rng, bool load_independent = false);

/// Small random instance for oracle comparisons: mixed affine, power and
/// piecewise costs, some zero-volume slots, always feasible.
ProblemInstance random_tiny_instance(Rng& rng, const TinyOptions& options = {});

}  // namespace rightsize
