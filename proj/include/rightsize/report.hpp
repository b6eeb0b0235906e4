#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rightsize/instance.hpp"
#include "rightsize/offline.hpp"

namespace rightsize {

/// One solver or algorithm run measured against the offline optimum.
struct RunReport {
  int run_id = 0;
  std::string algorithm;  // exact, approx, A, B, C
  std::optional<double> epsilon;
  std::optional<double> gamma;
  CostBreakdown cost;
  double optimum = 0.0;
  double ratio = 1.0;
  std::optional<double> bound;  // competitive or approximation factor
  bool bound_violated = false;
  double wall_seconds = 0.0;
  Schedule schedule;
};

struct CompareOptions {
  std::vector<double> epsilons{0.25, 0.5, 1.0};
  double online_epsilon = 0.5;
  bool concurrent = true;  // independent runs on worker threads
  DpOptions dp;
};

/// Runs exact, approx for each epsilon, and the online algorithms that apply
/// (A only with time-independent costs; none when the fleet varies). Run ids
/// follow that order regardless of how the runs were scheduled.
std::vector<RunReport> compare_all(const ProblemInstance& instance, const CompareOptions& options = {});

/// Columns: run_id,algorithm,epsilon,gamma,operating_total,switching_total,
/// grand_total,opt_cost,ratio,bound,bound_violated and, with `timing`,
/// wall_seconds. Absent parameters are empty cells.
std::string runs_csv(const std::vector<RunReport>& runs, bool timing = false);

/// Columns: run_id,algorithm,t,j,x_opt,x_alg,lambda (t, j 1-based), taking
/// x_opt from the exact run.
std::string slots_csv(const std::vector<RunReport>& runs, const ProblemInstance& instance);

}  // namespace rightsize
