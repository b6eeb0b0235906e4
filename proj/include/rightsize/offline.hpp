#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rightsize/grid.hpp"
#include "rightsize/instance.hpp"
#include "rightsize/kernels.hpp"

namespace rightsize {

inline constexpr std::size_t kDefaultStateCeiling = 10'000'000;

// kDefaultStateCeiling unless RIGHTSIZE_STATE_CEILING holds a positive integer.
std::size_t state_ceiling_from_env();

struct DpOptions {
  std::size_t state_ceiling = state_ceiling_from_env();  // max grid points per layer
  kernels::Execution execution = kernels::Execution::parallel;
  bool track_paths = true;  // keep per-layer argmins for backtracking
};

struct LayerSummary {
  double cost = kInfiniteCost;  // min_x V_t(x), the optimum of the prefix instance
  std::size_t argmin = 0;       // lexicographically smallest minimiser (grid index)
  ServerConfig config;
};

/// Shortest path through the layered graph, one slot at a time.
///
/// Each `push` does: arrivals A_t (all-zero origin for the first slot,
/// otherwise the previous down-sweep restricted to this slot's grid), up-sweep,
/// + g_t, down-sweep. The graph itself is never built.
class LayeredDp {
 public:
  LayeredDp(std::vector<double> beta, DpOptions options = {});

  LayerSummary push(std::shared_ptr<const ConfigGrid> grid, double volume, std::span<const CostFunction> costs);

  std::size_t layers() const { return layers_; }
  const LayerValueTable& last_down() const { return down_; }

  // Operating configurations of a shortest path ending at the all-zero state
  // after the last layer. Requires options.track_paths.
  Schedule backtrack() const;

 private:
  LayerValueTable arrivals_for(const ConfigGrid& grid) const;

  std::vector<double> beta_;
  DpOptions options_;
  std::size_t layers_ = 0;
  std::shared_ptr<const ConfigGrid> grid_;
  LayerValueTable down_;
  // Per-layer history, only with track_paths.
  std::vector<std::shared_ptr<const ConfigGrid>> grids_;
  std::vector<std::vector<std::uint32_t>> up_args_;
  std::vector<std::vector<std::uint32_t>> down_args_;
};

struct OfflineResult {
  double cost = kInfiniteCost;      // DP value
  std::optional<Schedule> schedule;  // absent in cost-only mode
  std::optional<CostBreakdown> breakdown;
};

/// Optimal schedule over the per-slot grids (one grid per slot, or one shared
/// grid). Errors: InfeasibleError when no finite path exists,
/// CapacityLimitError when a grid exceeds the state ceiling.
OfflineResult solve_on_grids(const ProblemInstance& instance, std::span<const std::shared_ptr<const ConfigGrid>> grids,
                             const DpOptions& options);

/// Exact optimum over {0..m_{t,j}} per slot.
OfflineResult solve_offline(const ProblemInstance& instance, const DpOptions& options = {});

// Per-slot full grids; slots with the same fleet row share one grid unless
// `share` is false.
std::vector<std::shared_ptr<const ConfigGrid>> full_grids(const ProblemInstance& instance, bool share = true);

}  // namespace rightsize
