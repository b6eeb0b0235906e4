#include "rightsize/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "rightsize/allocation.hpp"
#include "rightsize/errors.hpp"

namespace rightsize::oracle {

namespace {

// All configurations of one slot in lexicographic order.
std::vector<ServerConfig> slot_configs(std::span<const int> fleet) {
  std::vector<ServerConfig> out;
  std::vector<int> x(fleet.size(), 0);
  while (true) {
    out.emplace_back(x);
    std::size_t j = fleet.size();
    while (j > 0 && x[j - 1] == fleet[j - 1]) x[--j] = 0;
    if (j == 0) break;
    ++x[j - 1];
  }
  return out;
}

}  // namespace

std::size_t schedule_count(const ProblemInstance& instance) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (int t = 0; t < instance.horizon(); ++t) {
    for (int m : instance.fleet_at(t)) {
      const auto k = static_cast<std::size_t>(m) + 1;
      if (total > kMax / k) return kMax;
      total *= k;
    }
  }
  return total;
}

BruteForceResult brute_force_offline(const ProblemInstance& instance, EnumerationBudget budget) {
  require_valid(instance);
  const std::size_t count = schedule_count(instance);
  if (count > budget.max_states) {
    throw CapacityLimitError("enumeration needs " + std::to_string(count) + " schedules, budget is " +
                             std::to_string(budget.max_states));
  }
  const int T = instance.horizon();
  const auto d = static_cast<std::size_t>(instance.types());

  // g_t(x) per slot and configuration, via the allocation routine.
  std::vector<std::vector<ServerConfig>> configs;
  std::vector<std::vector<double>> op;
  for (int t = 0; t < T; ++t) {
    configs.push_back(slot_configs(instance.fleet_at(t)));
    std::vector<double> costs;
    for (const auto& x : configs.back()) costs.push_back(operating_cost(x.counts(), instance.volume(t), instance.costs_at(t)));
    op.push_back(std::move(costs));
  }

  BruteForceResult best;
  std::vector<std::size_t> pick(static_cast<std::size_t>(T), 0);
  while (true) {
    double total = 0.0;
    std::vector<int> prev(d, 0);
    for (int t = 0; t < T && total < kInfiniteCost; ++t) {
      const auto tt = static_cast<std::size_t>(t);
      const auto& x = configs[tt][pick[tt]];
      total += op[tt][pick[tt]];
      for (std::size_t j = 0; j < d; ++j) {
        total += instance.beta(static_cast<int>(j)) * std::max(x[j] - prev[j], 0);
        prev[j] = x[j];
      }
    }
    // Enumeration runs in lexicographic order, so strict < keeps the first minimum.
    if (total < best.cost) {
      best.cost = total;
      best.schedule.configs.clear();
      for (int t = 0; t < T; ++t) best.schedule.configs.push_back(configs[static_cast<std::size_t>(t)][pick[static_cast<std::size_t>(t)]]);
    }
    std::size_t t = pick.size();
    while (t > 0 && pick[t - 1] + 1 == configs[t - 1].size()) pick[--t] = 0;
    if (t == 0) break;
    ++pick[t - 1];
  }
  if (best.cost == kInfiniteCost) throw InfeasibleError("no finite-cost schedule exists");
  return best;
}

double grid_search_allocation(std::span<const int> servers, double volume, std::span<const CostFunction> costs,
                              int resolution) {
  const std::size_t d = servers.size();
  if (d < 1 || d > 3) throw ParameterError("grid search supports 1 <= d <= 3, got " + std::to_string(d));
  if (resolution < 1) throw ParameterError("resolution must be >= 1");
  const double n = resolution;
  auto g = [&](std::size_t j, int share) { return eval_g_single(servers[j], share / n, volume, costs[j]); };

  double best = kInfiniteCost;
  if (d == 1) return g(0, resolution);
  for (int a = 0; a <= resolution; ++a) {
    if (d == 2) {
      best = std::min(best, g(0, a) + g(1, resolution - a));
      continue;
    }
    for (int b = 0; a + b <= resolution; ++b) {
      best = std::min(best, g(0, a) + g(1, b) + g(2, resolution - a - b));
    }
  }
  return best;
}

}  // namespace rightsize::oracle
