#include <cstddef>
#include <vector>

#include "kernels_common.hpp"
#include "rightsize/allocation.hpp"
#include "rightsize/kernels.hpp"

namespace rightsize::kernels {

namespace omp {

// Below this many lines/points the fork-join overhead dominates.
constexpr std::ptrdiff_t kMinParallelWork = 256;

// Lines along one axis never share a cell, so each sweep pass parallelises
// over lines; passes over different axes stay ordered.
void relax_up(LayerValueTable& table, const ConfigGrid& grid, std::span<const double> beta) {
  for (std::size_t j = 0; j < grid.types(); ++j) {
    const auto lines = static_cast<std::ptrdiff_t>(detail::line_count(grid, j));
    const auto& axis = grid.axis(j);
    const std::size_t stride = grid.stride(j);
#pragma omp parallel for schedule(static) if (lines >= kMinParallelWork)
    for (std::ptrdiff_t line = 0; line < lines; ++line) {
      detail::relax_up_line(table, axis, detail::line_start(grid, j, static_cast<std::size_t>(line)), stride, beta[j]);
    }
  }
}

void relax_down(LayerValueTable& table, const ConfigGrid& grid) {
  for (std::size_t j = 0; j < grid.types(); ++j) {
    const auto lines = static_cast<std::ptrdiff_t>(detail::line_count(grid, j));
    const std::size_t length = grid.axis(j).size();
    const std::size_t stride = grid.stride(j);
#pragma omp parallel for schedule(static) if (lines >= kMinParallelWork)
    for (std::ptrdiff_t line = 0; line < lines; ++line) {
      detail::relax_down_line(table, length, detail::line_start(grid, j, static_cast<std::size_t>(line)), stride);
    }
  }
}

std::vector<double> operating_costs(const ConfigGrid& grid, double volume, std::span<const CostFunction> costs) {
  std::vector<double> out(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel if (n >= kMinParallelWork)
  {
    std::vector<int> counts(grid.types());
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      grid.decode(static_cast<std::size_t>(i), counts);
      out[static_cast<std::size_t>(i)] = operating_cost(counts, volume, costs);
    }
  }
  return out;
}

}  // namespace omp

void relax_up(LayerValueTable& table, const ConfigGrid& grid, std::span<const double> beta, Execution exec) {
  if (exec == Execution::parallel) {
    omp::relax_up(table, grid, beta);
  } else {
    serial::relax_up(table, grid, beta);
  }
}

void relax_down(LayerValueTable& table, const ConfigGrid& grid, Execution exec) {
  if (exec == Execution::parallel) {
    omp::relax_down(table, grid);
  } else {
    serial::relax_down(table, grid);
  }
}

std::vector<double> operating_costs(const ConfigGrid& grid, double volume, std::span<const CostFunction> costs,
                                    Execution exec) {
  return exec == Execution::parallel ? omp::operating_costs(grid, volume, costs)
                                     : serial::operating_costs(grid, volume, costs);
}

}  // namespace rightsize::kernels
