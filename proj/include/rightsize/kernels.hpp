#pragma once

#include <span>
#include <vector>

#include "rightsize/cost_function.hpp"
#include "rightsize/grid.hpp"

// Per-layer DP kernels. `serial` is the reference implementation; `omp`
// parallelises over independent grid lines (sweeps) or grid points (operating
// costs) and must produce bit-identical tables.
namespace rightsize::kernels {

enum class Execution { serial, parallel };

namespace serial {

// U(x) = min_{x' <= x} A(x') + sum_j beta_j (x_j - x'_j), one in-place pass per type.
void relax_up(LayerValueTable& table, const ConfigGrid& grid, std::span<const double> beta);
// B(x) = min_{x' >= x} V(x').
void relax_down(LayerValueTable& table, const ConfigGrid& grid);
// g(x) for every grid point.
std::vector<double> operating_costs(const ConfigGrid& grid, double volume, std::span<const CostFunction> costs);

}  // namespace serial

namespace omp {

void relax_up(LayerValueTable& table, const ConfigGrid& grid, std::span<const double> beta);
void relax_down(LayerValueTable& table, const ConfigGrid& grid);
std::vector<double> operating_costs(const ConfigGrid& grid, double volume, std::span<const CostFunction> costs);

}  // namespace omp

void relax_up(LayerValueTable& table, const ConfigGrid& grid, std::span<const double> beta, Execution exec);
void relax_down(LayerValueTable& table, const ConfigGrid& grid, Execution exec);
std::vector<double> operating_costs(const ConfigGrid& grid, double volume, std::span<const CostFunction> costs,
                                    Execution exec);

}  // namespace rightsize::kernels
