#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rightsize/cost_function.hpp"

namespace rightsize {

/// Active server count per type for one slot.
class ServerConfig {
 public:
  ServerConfig() = default;
  explicit ServerConfig(std::vector<int> counts) : counts_(std::move(counts)) {}
  ServerConfig(std::initializer_list<int> counts) : counts_(counts) {}

  static ServerConfig zeros(std::size_t types) { return ServerConfig(std::vector<int>(types, 0)); }

  std::size_t size() const { return counts_.size(); }
  int operator[](std::size_t j) const { return counts_[j]; }
  int& operator[](std::size_t j) { return counts_[j]; }
  const std::vector<int>& counts() const { return counts_; }
  bool is_zero() const;

  friend auto operator<=>(const ServerConfig&, const ServerConfig&) = default;
  friend bool operator==(const ServerConfig&, const ServerConfig&) = default;

 private:
  std::vector<int> counts_;
};

/// The configurations x_1..x_T; x_0 and x_{T+1} are implicitly all-zero.
struct Schedule {
  std::vector<ServerConfig> configs;

  std::size_t horizon() const { return configs.size(); }
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct SlotCost {
  double operating = 0.0;
  double switching = 0.0;
};

struct CostBreakdown {
  double operating_total = 0.0;
  double switching_total = 0.0;
  double grand_total = 0.0;
  std::vector<SlotCost> per_slot;
};

/// (T, d, m, beta, F, Lambda). Fleet sizes and cost functions are stored
/// either once (time-independent) or once per slot.
///
/// The constructor stores its inputs as given; `validate_instance` reports
/// inconsistencies and the solvers refuse instances that fail it. Slot
/// indices in the API are 0-based; all messages and files use 1-based slots.
class ProblemInstance {
 public:
  using FleetRows = std::vector<std::vector<int>>;
  using CostRows = std::vector<std::vector<CostFunction>>;

  ProblemInstance() = default;
  ProblemInstance(int horizon, int types, std::vector<double> beta, FleetRows fleet, CostRows costs,
                  std::vector<double> volumes);

  // Convenience for the common time-independent case.
  static ProblemInstance time_independent(std::vector<double> beta, std::vector<int> fleet,
                                          std::vector<CostFunction> costs, std::vector<double> volumes);

  int horizon() const { return horizon_; }
  int types() const { return types_; }

  double beta(int j) const { return beta_[static_cast<std::size_t>(j)]; }
  const std::vector<double>& betas() const { return beta_; }
  double volume(int t) const { return volumes_[static_cast<std::size_t>(t)]; }
  const std::vector<double>& volumes() const { return volumes_; }

  int fleet(int t, int j) const { return fleet_at(t)[static_cast<std::size_t>(j)]; }
  std::span<const int> fleet_at(int t) const;
  const CostFunction& cost(int t, int j) const { return costs_at(t)[static_cast<std::size_t>(j)]; }
  std::span<const CostFunction> costs_at(int t) const;

  // Stored per slot (the file carried T rows).
  bool fleet_per_slot() const { return fleet_.size() != 1; }
  bool costs_per_slot() const { return costs_.size() != 1; }

  bool fleet_varies() const;
  // f_{t,j} identical for every t (stored once, or T equal rows).
  bool is_time_independent() const;

  // Sum_j m_{t,j} * z_max_{t,j}.
  double capacity(int t) const;
  double idle_cost(int t, int j) const { return cost(t, j).idle(); }

  // I^t: the first `slots` slots.
  ProblemInstance prefix(int slots) const;

  const FleetRows& fleet_rows() const { return fleet_; }
  const CostRows& cost_rows() const { return costs_; }

  // Copy with per-slot fleet/cost storage (same values).
  ProblemInstance expanded() const;

 private:
  int horizon_ = 0;
  int types_ = 0;
  std::vector<double> beta_;
  FleetRows fleet_;
  CostRows costs_;
  std::vector<double> volumes_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate_instance(const ProblemInstance& instance);

// Throws InfeasibleError / DimensionError carrying the report when validation fails.
void require_valid(const ProblemInstance& instance);

struct FeasibilityResult {
  bool feasible = true;
  std::string violation;  // first violation, empty when feasible
  explicit operator bool() const { return feasible; }
};

// Throws DimensionError when the schedule shape does not match the instance.
FeasibilityResult is_feasible(const Schedule& schedule, const ProblemInstance& instance);

/// Operating cost g_t(x_t) plus power-up cost beta_j (x_{t,j} - x_{t-1,j})^+
/// per slot. Throws InfeasibleError naming the first violated slot.
CostBreakdown schedule_cost(const Schedule& schedule, const ProblemInstance& instance);

// Sum_j beta_j (to_j - from_j)^+.
double switching_cost(const ServerConfig& from, const ServerConfig& to, std::span<const double> beta);

// Relative/absolute tolerance used throughout: |a-b| <= tol * max(1, |a|, |b|).
bool costs_close(double a, double b, double tol = 1e-9);

}  // namespace rightsize
