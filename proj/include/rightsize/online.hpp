#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rightsize/instance.hpp"
#include "rightsize/offline.hpp"

namespace rightsize {

/// Incremental optimum of the prefix instances I^1, I^2, ...: one DP layer
/// per fed slot, keeping only the rolling table.
class PrefixOptimizer {
 public:
  struct Step {
    ServerConfig config;  // last configuration of an optimal schedule for the prefix
    double cost = kInfiniteCost;
  };

  // `gamma` restricts the state space to geometric grids (heuristic; the
  // competitive guarantees assume the exact prefix optimum).
  PrefixOptimizer(std::vector<double> beta, std::vector<int> fleet, std::optional<double> gamma = std::nullopt,
                  kernels::Execution execution = kernels::Execution::parallel);

  Step feed(double volume, std::span<const CostFunction> costs);
  int slots() const { return static_cast<int>(dp_.layers()); }
  const std::optional<Step>& last() const { return last_; }

 private:
  std::shared_ptr<const ConfigGrid> grid_;
  LayeredDp dp_;
  std::optional<Step> last_;
};

/// Servers are powered up to reach a target count and each batch stays on for
/// `dwell[j]` slots: a batch started at slot u is removed at slot u + dwell[j].
class FixedDwellPolicy {
 public:
  explicit FixedDwellPolicy(std::vector<int> dwell);

  // Feed the target counts for the next slot; returns the active counts.
  const std::vector<int>& step(std::span<const int> target);

  const std::vector<int>& current() const { return current_; }
  const std::vector<int>& last_powered_up() const { return powered_up_.back(); }
  const std::vector<int>& last_expired() const { return expired_; }
  // Sum of batches still running, per type.
  std::vector<int> live_total() const;

 private:
  std::vector<int> dwell_;
  std::vector<int> current_;
  std::vector<int> expired_;
  std::vector<std::vector<int>> powered_up_;  // per slot, per type
};

/// Slots u < t whose batches expire at slot t: the idle cost accumulated over
/// u+1..t-1 is within `beta` but over u+1..t exceeds it. `idle` holds l_1..l_t
/// (index 0 is slot 1); returned slots are 1-based and ascending.
std::vector<int> expiry_slots(std::span<const double> idle, double beta, int t);

// Largest n <= horizon - t with l_{t+1} + ... + l_{t+n} <= beta (0 when none); 1-based t.
int idle_dwell(std::span<const double> idle, double beta, int t, int horizon);

/// Same power-up rule as FixedDwellPolicy; a batch started at u is removed at
/// the slot where its accumulated idle cost after u first exceeds beta.
class IdleBudgetPolicy {
 public:
  explicit IdleBudgetPolicy(std::vector<double> beta);

  const std::vector<int>& step(std::span<const int> target, std::span<const double> idle);

  const std::vector<int>& current() const { return current_; }
  const std::vector<int>& last_powered_up() const { return powered_up_.back(); }
  const std::vector<int>& last_expired() const { return expired_; }
  // W_t of the last step per type (1-based slots).
  const std::vector<std::vector<int>>& last_expiry_sets() const { return expiry_sets_; }
  std::vector<int> live_total() const;

 private:
  std::vector<double> beta_;
  std::vector<int> current_;
  std::vector<int> expired_;
  std::vector<std::vector<int>> powered_up_;
  std::vector<std::vector<double>> idle_;  // per type, per slot
  std::vector<std::vector<int>> expiry_sets_;
  std::vector<std::vector<bool>> retired_;  // per type, per slot: batch already removed
};

struct OnlineSlotRecord {
  ServerConfig prefix_config;  // x-hat the decision had to dominate
  ServerConfig config;         // emitted x_t
  std::vector<int> powered_up;
  std::vector<int> expired;
  double prefix_cost = 0.0;
  int sub_slots = 1;   // C only: n-tilde_t
  int chosen_sub = 0;  // C only: mu(t), 0-based within the slot
};

enum class OnlineAlgorithm { A, B, C };

std::string to_string(OnlineAlgorithm alg);

struct OnlineOptions {
  double epsilon = 0.5;                 // C only
  std::optional<double> prefix_gamma;   // heuristic grid for the prefix optimizer
  kernels::Execution execution = kernels::Execution::parallel;
  std::size_t max_sub_slots = 1'000'000;  // C: total sub-slot budget
};

/// Streaming scheduler: `step` receives one slot's volume and cost functions
/// and returns that slot's configuration without seeing later slots.
class OnlineScheduler {
 public:
  virtual ~OnlineScheduler() = default;
  virtual ServerConfig step(double volume, std::span<const CostFunction> costs) = 0;
  const std::vector<OnlineSlotRecord>& records() const { return records_; }

 protected:
  std::vector<OnlineSlotRecord> records_;
};

/// Algorithm A: time-independent costs, dwell ceil(beta_j / f_j(0)), or the
/// whole horizon when f_j(0) = 0.
class AlgorithmA final : public OnlineScheduler {
 public:
  AlgorithmA(std::vector<double> beta, std::vector<int> fleet, std::vector<CostFunction> costs, int horizon,
             const OnlineOptions& options = {});
  ServerConfig step(double volume, std::span<const CostFunction> costs) override;
  const std::vector<int>& dwell() const { return dwell_; }

 private:
  std::vector<CostFunction> costs_;
  std::vector<int> dwell_;
  PrefixOptimizer prefix_;
  FixedDwellPolicy policy_;
};

// ceil(beta / idle), or `horizon` when idle == 0.
int fixed_dwell(double beta, double idle, int horizon);

/// Algorithm B: time-dependent costs, idle-budget expiry.
class AlgorithmB final : public OnlineScheduler {
 public:
  AlgorithmB(std::vector<double> beta, std::vector<int> fleet, const OnlineOptions& options = {});
  ServerConfig step(double volume, std::span<const CostFunction> costs) override;
  const IdleBudgetPolicy& policy() const { return policy_; }

 private:
  PrefixOptimizer prefix_;
  IdleBudgetPolicy policy_;
};

// n-tilde_t = max(1, ceil((d / epsilon) * max_j l_{t,j} / beta_j)).
int sub_slot_count(std::span<const double> idle, std::span<const double> beta, double epsilon);

/// Algorithm C: each slot is split into n-tilde_t sub-slots with costs
/// f / n-tilde_t and the full volume, fed to an inner Algorithm B; the slot
/// emits the inner configuration of least operating cost (earliest on ties).
class AlgorithmC final : public OnlineScheduler {
 public:
  AlgorithmC(std::vector<double> beta, std::vector<int> fleet, const OnlineOptions& options = {});
  ServerConfig step(double volume, std::span<const CostFunction> costs) override;

  // The sub-slot instance seen so far and the inner schedule on it.
  ProblemInstance expanded_instance() const;
  const Schedule& inner_schedule() const { return inner_schedule_; }
  const std::vector<ServerConfig>& inner_prefix_configs() const { return inner_prefix_; }

 private:
  std::vector<double> beta_;
  std::vector<int> fleet_;
  OnlineOptions options_;
  AlgorithmB inner_;
  Schedule inner_schedule_;
  std::vector<ServerConfig> inner_prefix_;
  std::vector<std::vector<CostFunction>> sub_costs_;
  std::vector<double> sub_volumes_;
};

struct OnlineRunResult {
  OnlineAlgorithm algorithm = OnlineAlgorithm::A;
  Schedule schedule;
  CostBreakdown cost;
  std::vector<OnlineSlotRecord> records;
  double bound = 0.0;                  // proven competitive ratio for this instance
  std::optional<double> optimum;       // offline optimum when audited
  std::optional<double> ratio;         // cost / optimum (1 when both are 0)
  bool bound_violated = false;
  // C only: cost of the inner schedule on the sub-slot instance.
  std::optional<double> inner_cost;
};

// Sum_j max_t l_{t,j} / beta_j.
double idle_ratio_constant(const ProblemInstance& instance);

// f_{t,j} constant in the load for every t, j.
bool is_load_independent(const ProblemInstance& instance);

/// Competitive bound: 2d+1 for A (2d when costs are load-independent),
/// 2d+1+c(I) for B, 2d+1+epsilon for C.
double competitive_bound(const ProblemInstance& instance, OnlineAlgorithm alg, double epsilon);

/// Streams the instance through the algorithm. With `audit`, also solves
/// offline and flags ratio > bound (1e-6 relative slack). Throws
/// ParameterError when A meets time-dependent costs, when the fleet varies
/// over time, or for epsilon <= 0 with C.
OnlineRunResult run_online(const ProblemInstance& instance, OnlineAlgorithm alg, const OnlineOptions& options = {},
                           bool audit = true);

// Ratio convention: 1 when both are 0, +inf when only the optimum is 0.
double competitive_ratio(double cost, double optimum);

}  // namespace rightsize
