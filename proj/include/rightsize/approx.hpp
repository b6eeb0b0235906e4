#pragma once

#include <memory>
#include <vector>

#include "rightsize/offline.hpp"

namespace rightsize {

/// {0, 1, m} together with floor(gamma^k) and ceil(gamma^k) for k >= 1 that do
/// not exceed m, sorted and deduplicated. m = 0 yields {0}. Throws
/// ParameterError for gamma <= 1 or m < 0.
std::vector<int> build_gamma_grid(int m, double gamma);

// gamma = 1 + epsilon / 2, giving a (1 + epsilon)-approximation.
double gamma_for_epsilon(double epsilon);

// Per-slot product grids of build_gamma_grid(m_{t,j}, gamma).
std::vector<std::shared_ptr<const ConfigGrid>> gamma_grids(const ProblemInstance& instance, double gamma);

struct ApproxResult {
  OfflineResult offline;
  double gamma = 0.0;
};

/// Shortest path restricted to the geometric grids; its cost is at most
/// (2 gamma - 1) times the optimum and the schedule is feasible for the
/// original instance.
ApproxResult solve_gamma(const ProblemInstance& instance, double gamma, const DpOptions& options = {});
ApproxResult solve_approx(const ProblemInstance& instance, double epsilon, const DpOptions& options = {});

}  // namespace rightsize
