#pragma once

// Shared helpers for the unit tests and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <vector>

#include "rightsize/generate.hpp"
#include "rightsize/grid.hpp"
#include "rightsize/instance.hpp"

namespace rightsize::testing {

// U(x) = min over x' <= x of A(x') + sum_j beta_j (axis value distance), O(|grid|^2).
inline std::vector<double> brute_relax_up(const std::vector<double>& a, const ConfigGrid& grid,
                                          const std::vector<double>& beta) {
  std::vector<double> out(a.size());
  const auto d = grid.types();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto x = grid.config(i);
    double best = a[i];
    for (std::size_t k = 0; k < a.size(); ++k) {
      const auto y = grid.config(k);
      bool below = true;
      double step = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j] > x[j]) below = false;
        step += beta[j] * (x[j] - y[j]);
      }
      if (below) best = std::min(best, a[k] + step);
    }
    out[i] = best;
  }
  return out;
}

// B(x) = min over x' >= x of V(x').
inline std::vector<double> brute_relax_down(const std::vector<double>& v, const ConfigGrid& grid) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = grid.config(i);
    double best = v[i];
    for (std::size_t k = 0; k < v.size(); ++k) {
      const auto y = grid.config(k);
      bool above = true;
      for (std::size_t j = 0; j < grid.types(); ++j) above = above && y[j] >= x[j];
      if (above) best = std::min(best, v[k]);
    }
    out[i] = best;
  }
  return out;
}

// Random table over `size` points; roughly one value in five is +inf.
inline std::vector<double> random_table(Rng& rng, std::size_t size) {
  std::vector<double> values;
  for (std::size_t i = 0; i < size; ++i) {
    values.push_back(rng.chance(0.2) ? kInfiniteCost : std::round(rng.uniform(0.0, 20.0) * 8.0) / 8.0);
  }
  return values;
}

struct AllocationSample {
  std::vector<int> servers;
  double volume = 0.0;
  std::vector<CostFunction> costs;
};

// (x, lambda, f) with every kink of x_j f_j(v / x_j) and every capacity on the
// 1/200 lattice of the simplex: breakpoints and z_max are multiples of 0.05 and
// lambda is one of a few values dividing the lattice evenly. A simplex grid
// search with 200 steps can then reach the optimal split up to second order.
inline AllocationSample aligned_allocation_sample(Rng& rng) {
  auto q = [&](double lo, double hi) { return std::round(rng.uniform(lo, hi) * 20.0) / 20.0; };
  auto r6 = [](double v) { return std::round(v * 1e6) / 1e6; };
  AllocationSample s;
  const int d = rng.integer(1, 3);
  double cap = 0.0;
  for (int j = 0; j < d; ++j) {
    const double z_max = q(0.5, 2.0);
    const double idle = rng.chance(0.15) ? 0.0 : r6(rng.uniform(0.2, 3.0));
    CostFunction f;
    switch (rng.integer(0, 2)) {
      case 0:
        f = CostFunction::affine(idle, r6(rng.uniform(0.0, 3.0)), z_max);
        break;
      case 1:
        f = CostFunction::power(idle, r6(rng.uniform(0.1, 3.0)), r6(rng.uniform(1.0, 3.0)), z_max);
        break;
      default: {
        std::vector<Breakpoint> pts{{0.0, idle}};
        const int pieces = rng.integer(1, 3);
        double z = 0.0;
        double value = idle;
        double slope = rng.uniform(0.0, 1.0);
        for (int k = 0; k < pieces; ++k) {
          const double hi = z_max - 0.05 * (pieces - k - 1);
          const double next = k + 1 == pieces ? z_max : std::max(z + 0.05, std::min(hi, q(z + 0.05, z_max)));
          value = r6(value + slope * (next - z));
          z = next;
          pts.push_back({z, value});
          slope += rng.uniform(0.0, 2.0);
        }
        f = CostFunction::piecewise(std::move(pts), z_max);
      }
    }
    s.servers.push_back(rng.integer(0, 4));
    cap += s.servers.back() * z_max;
    s.costs.push_back(std::move(f));
  }
  std::vector<double> volumes{0.0};
  for (double v : {0.25, 0.5, 1.0, 1.25, 2.0, 2.5, 5.0}) {
    if (v <= cap) volumes.push_back(v);
  }
  s.volume = volumes[static_cast<std::size_t>(rng.integer(0, static_cast<int>(volumes.size()) - 1))];
  return s;
}

// Convex nondecreasing f for equal-split checks.
inline CostFunction random_convex(Rng& rng) {
  const double z_max = 10.0;
  switch (rng.integer(0, 2)) {
    case 0:
      return CostFunction::affine(rng.uniform(0.0, 2.0), rng.uniform(0.0, 3.0), z_max);
    case 1:
      return CostFunction::power(rng.uniform(0.0, 2.0), rng.uniform(0.0, 3.0), rng.uniform(1.0, 4.0), z_max);
    default: {
      std::vector<Breakpoint> pts{{0.0, rng.uniform(0.0, 2.0)}};
      double slope = rng.uniform(0.0, 1.0);
      for (int k = 1; k <= 4; ++k) {
        pts.push_back({k * 1.0, pts.back().value + slope});
        slope += rng.uniform(0.0, 2.0);
      }
      return CostFunction::piecewise(std::move(pts), z_max);
    }
  }
}

// Dominance x_alg >= x_hat at every recorded slot.
template <class Records>
bool dominates_prefix(const Records& records) {
  for (const auto& r : records) {
    for (std::size_t j = 0; j < r.config.size(); ++j) {
      if (r.config[j] < r.prefix_config[j]) return false;
    }
  }
  return true;
}

}  // namespace rightsize::testing
