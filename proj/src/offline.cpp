#include "rightsize/offline.hpp"

#include <cstdlib>
#include <string>

#include "rightsize/errors.hpp"

namespace rightsize {

std::size_t state_ceiling_from_env() {
  const char* raw = std::getenv("RIGHTSIZE_STATE_CEILING");
  if (raw == nullptr || *raw == '\0') return kDefaultStateCeiling;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return kDefaultStateCeiling;
  return static_cast<std::size_t>(value);
}

LayeredDp::LayeredDp(std::vector<double> beta, DpOptions options) : beta_(std::move(beta)), options_(options) {}

LayerValueTable LayeredDp::arrivals_for(const ConfigGrid& grid) const {
  if (layers_ == 0) return LayerValueTable::origin(grid.size());
  if (grid_.get() == &grid) return LayerValueTable::from_values(down_.values);
  // Only configurations available in both slots carry over.
  std::vector<double> values(grid.size(), kInfiniteCost);
  std::vector<int> counts(grid.types());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid.decode(i, counts);
    if (const auto prev = grid_->find(counts)) values[i] = down_.values[*prev];
  }
  return LayerValueTable::from_values(std::move(values));
}

LayerSummary LayeredDp::push(std::shared_ptr<const ConfigGrid> grid, double volume, std::span<const CostFunction> costs) {
  if (grid->size() > options_.state_ceiling) {
    throw CapacityLimitError("layer grid has " + std::to_string(grid->size()) + " states, ceiling is " +
                             std::to_string(options_.state_ceiling));
  }
  LayerValueTable table = arrivals_for(*grid);
  kernels::relax_up(table, *grid, beta_, options_.execution);

  const auto op = kernels::operating_costs(*grid, volume, costs, options_.execution);
  std::vector<double> values(grid->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = table.values[i] + op[i];
  if (options_.track_paths) up_args_.push_back(std::move(table.argmin));

  LayerValueTable down = LayerValueTable::from_values(std::move(values));
  kernels::relax_down(down, *grid, options_.execution);
  if (options_.track_paths) {
    down_args_.push_back(down.argmin);
    grids_.push_back(grid);
  }

  down_ = std::move(down);
  grid_ = std::move(grid);
  ++layers_;

  LayerSummary summary;
  summary.cost = down_.values[0];
  summary.argmin = down_.argmin[0];
  summary.config = grid_->config(summary.argmin);
  return summary;
}

Schedule LayeredDp::backtrack() const {
  if (!options_.track_paths) throw ParameterError("backtrack needs track_paths");
  Schedule schedule;
  schedule.configs.resize(layers_);
  std::size_t op = down_args_.back()[0];
  for (std::size_t t = layers_; t-- > 0;) {
    const ConfigGrid& grid = *grids_[t];
    schedule.configs[t] = grid.config(op);
    const std::size_t arrival = up_args_[t][op];
    if (t == 0) break;
    if (grids_[t - 1] == grids_[t]) {
      op = down_args_[t - 1][arrival];
    } else {
      const auto prev = grids_[t - 1]->find(grid.config(arrival).counts());
      op = down_args_[t - 1][prev.value()];
    }
  }
  return schedule;
}

std::vector<std::shared_ptr<const ConfigGrid>> full_grids(const ProblemInstance& instance, bool share) {
  std::vector<std::shared_ptr<const ConfigGrid>> grids;
  for (int t = 0; t < instance.horizon(); ++t) {
    const auto fleet = instance.fleet_at(t);
    if (share && !grids.empty() && !instance.fleet_per_slot()) {
      grids.push_back(grids.back());
      continue;
    }
    grids.push_back(std::make_shared<const ConfigGrid>(ConfigGrid::full(fleet)));
  }
  return grids;
}

OfflineResult solve_on_grids(const ProblemInstance& instance, std::span<const std::shared_ptr<const ConfigGrid>> grids,
                             const DpOptions& options) {
  require_valid(instance);
  LayeredDp dp(instance.betas(), options);
  for (int t = 0; t < instance.horizon(); ++t) {
    dp.push(grids[static_cast<std::size_t>(t)], instance.volume(t), instance.costs_at(t));
  }
  OfflineResult result;
  result.cost = dp.last_down().values[0];
  if (result.cost == kInfiniteCost) throw InfeasibleError("no finite-cost schedule exists");
  if (options.track_paths) {
    result.schedule = dp.backtrack();
    result.breakdown = schedule_cost(*result.schedule, instance);
  }
  return result;
}

OfflineResult solve_offline(const ProblemInstance& instance, const DpOptions& options) {
  require_valid(instance);
  const auto grids = full_grids(instance, !instance.fleet_per_slot());
  return solve_on_grids(instance, grids, options);
}

}  // namespace rightsize
