#include <vector>

#include "kernels_common.hpp"
#include "rightsize/allocation.hpp"
#include "rightsize/kernels.hpp"

namespace rightsize::kernels::serial {

void relax_up(LayerValueTable& table, const ConfigGrid& grid, std::span<const double> beta) {
  for (std::size_t j = 0; j < grid.types(); ++j) {
    const std::size_t lines = detail::line_count(grid, j);
    for (std::size_t line = 0; line < lines; ++line) {
      detail::relax_up_line(table, grid.axis(j), detail::line_start(grid, j, line), grid.stride(j), beta[j]);
    }
  }
}

void relax_down(LayerValueTable& table, const ConfigGrid& grid) {
  for (std::size_t j = 0; j < grid.types(); ++j) {
    const std::size_t lines = detail::line_count(grid, j);
    for (std::size_t line = 0; line < lines; ++line) {
      detail::relax_down_line(table, grid.axis(j).size(), detail::line_start(grid, j, line), grid.stride(j));
    }
  }
}

std::vector<double> operating_costs(const ConfigGrid& grid, double volume, std::span<const CostFunction> costs) {
  std::vector<double> out(grid.size());
  std::vector<int> counts(grid.types());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid.decode(i, counts);
    out[i] = operating_cost(counts, volume, costs);
  }
  return out;
}

}  // namespace rightsize::kernels::serial
