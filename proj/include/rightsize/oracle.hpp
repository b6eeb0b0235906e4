#pragma once

#include <cstddef>
#include <span>

#include "rightsize/instance.hpp"

// Brute-force references for the solvers. Nothing here calls the layered DP.
namespace rightsize::oracle {

struct EnumerationBudget {
  std::size_t max_states = 1'000'000;  // cap on prod_t prod_j (m_{t,j} + 1)
};

struct BruteForceResult {
  Schedule schedule;
  double cost = kInfiniteCost;
};

// Number of schedules the enumeration visits, saturating at SIZE_MAX.
std::size_t schedule_count(const ProblemInstance& instance);

/// Minimum-cost schedule over every configuration sequence; ties go to the
/// lexicographically smallest sequence. Throws CapacityLimitError above the
/// budget and InfeasibleError when nothing is finite.
BruteForceResult brute_force_offline(const ProblemInstance& instance, EnumerationBudget budget = {});

/// min over z on the simplex with step 1/resolution of sum_j g_{t,j}(x_j, z_j).
/// Requires 1 <= d <= 3 (ParameterError otherwise).
double grid_search_allocation(std::span<const int> servers, double volume, std::span<const CostFunction> costs,
                              int resolution);

}  // namespace rightsize::oracle
