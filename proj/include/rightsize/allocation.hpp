#pragma once

#include <span>
#include <vector>

#include "rightsize/cost_function.hpp"

namespace rightsize {

/// Optimal split of one slot's volume across server types.
struct AllocationResult {
  std::vector<double> fractions;  // z_j, sums to 1 when volume > 0
  std::vector<double> volumes;    // v_j = volume * z_j
  double cost = kInfiniteCost;    // g_t(x)
};

// g_{t,j}(x, z) = x f(volume z / x); +inf when x = 0 carries load or load exceeds z_max.
double eval_g_single(int servers, double fraction, double volume, const CostFunction& f);

/// g_t(x): minimum of sum_j x_j f_j(v_j / x_j) over v_j >= 0, sum v_j = volume,
/// v_j <= x_j z_max_j. Load within a type is split equally.
///
/// Piecewise-linear universes are solved exactly by filling segments in
/// slope order. Otherwise the shared marginal cost is found by bisection and
/// plateau volume is handed to types in index order. Infeasible capacity gives
/// cost +inf with empty fractions.
AllocationResult eval_g_total(std::span<const int> servers, double volume, std::span<const CostFunction> costs);

// Cost only; same result as eval_g_total(...).cost.
double operating_cost(std::span<const int> servers, double volume, std::span<const CostFunction> costs);

}  // namespace rightsize
