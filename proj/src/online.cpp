#include "rightsize/online.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rightsize/allocation.hpp"
#include "rightsize/approx.hpp"
#include "rightsize/errors.hpp"

namespace rightsize {

namespace {

std::shared_ptr<const ConfigGrid> prefix_grid(const std::vector<int>& fleet, std::optional<double> gamma) {
  if (!gamma) return std::make_shared<const ConfigGrid>(ConfigGrid::full(fleet));
  std::vector<std::vector<int>> axes;
  for (int m : fleet) axes.push_back(build_gamma_grid(m, *gamma));
  return std::make_shared<const ConfigGrid>(std::move(axes));
}

DpOptions rolling(kernels::Execution execution) {
  DpOptions options;
  options.track_paths = false;
  options.execution = execution;
  return options;
}

// Raise each count to its target, returning the number powered up.
std::vector<int> top_up(std::vector<int>& current, std::span<const int> target) {
  std::vector<int> powered(current.size(), 0);
  for (std::size_t j = 0; j < current.size(); ++j) {
    if (current[j] <= target[j]) {
      powered[j] = target[j] - current[j];
      current[j] = target[j];
    }
  }
  return powered;
}

std::vector<double> idle_costs(std::span<const CostFunction> costs) {
  std::vector<double> idle;
  for (const auto& f : costs) idle.push_back(f.idle());
  return idle;
}

}  // namespace

// ---------------------------------------------------------------------------

PrefixOptimizer::PrefixOptimizer(std::vector<double> beta, std::vector<int> fleet, std::optional<double> gamma,
                                 kernels::Execution execution)
    : grid_(prefix_grid(fleet, gamma)), dp_(std::move(beta), rolling(execution)) {}

PrefixOptimizer::Step PrefixOptimizer::feed(double volume, std::span<const CostFunction> costs) {
  const auto summary = dp_.push(grid_, volume, costs);
  last_ = Step{summary.config, summary.cost};
  return *last_;
}

// ---------------------------------------------------------------------------

FixedDwellPolicy::FixedDwellPolicy(std::vector<int> dwell)
    : dwell_(std::move(dwell)), current_(dwell_.size(), 0), expired_(dwell_.size(), 0) {}

const std::vector<int>& FixedDwellPolicy::step(std::span<const int> target) {
  const auto t = static_cast<long>(powered_up_.size());
  for (std::size_t j = 0; j < dwell_.size(); ++j) {
    const long u = t - dwell_[j];
    expired_[j] = u >= 0 ? powered_up_[static_cast<std::size_t>(u)][j] : 0;
    current_[j] -= expired_[j];
  }
  powered_up_.push_back(top_up(current_, target));
  return current_;
}

std::vector<int> FixedDwellPolicy::live_total() const {
  const auto slots = static_cast<long>(powered_up_.size());
  std::vector<int> total(dwell_.size(), 0);
  for (std::size_t j = 0; j < dwell_.size(); ++j) {
    for (long u = std::max(0L, slots - dwell_[j]); u < slots; ++u) total[j] += powered_up_[static_cast<std::size_t>(u)][j];
  }
  return total;
}

int fixed_dwell(double beta, double idle, int horizon) {
  if (idle <= 0.0) return std::max(horizon, 1);
  const double slots = std::ceil(beta / idle);
  constexpr double kCap = 1e9;
  return static_cast<int>(std::min(slots, kCap));
}

// ---------------------------------------------------------------------------

std::vector<int> expiry_slots(std::span<const double> idle, double beta, int t) {
  std::vector<int> out;
  if (t < 2) return out;
  const double current = idle[static_cast<std::size_t>(t - 1)];
  double since = 0.0;  // l_{u+1} + ... + l_{t-1}
  for (int u = t - 1; u >= 1 && since <= beta; --u) {
    if (beta < since + current) out.push_back(u);
    since += idle[static_cast<std::size_t>(u - 1)];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int idle_dwell(std::span<const double> idle, double beta, int t, int horizon) {
  double sum = 0.0;
  int best = 0;
  for (int v = t + 1; v <= horizon; ++v) {
    sum += idle[static_cast<std::size_t>(v - 1)];
    if (sum > beta) break;
    best = v - t;
  }
  return best;
}

IdleBudgetPolicy::IdleBudgetPolicy(std::vector<double> beta)
    : beta_(std::move(beta)),
      current_(beta_.size(), 0),
      expired_(beta_.size(), 0),
      idle_(beta_.size()),
      expiry_sets_(beta_.size()),
      retired_(beta_.size()) {}

const std::vector<int>& IdleBudgetPolicy::step(std::span<const int> target, std::span<const double> idle) {
  const int t = static_cast<int>(powered_up_.size()) + 1;
  for (std::size_t j = 0; j < beta_.size(); ++j) {
    idle_[j].push_back(idle[j]);
    retired_[j].push_back(false);
    expiry_sets_[j] = expiry_slots(idle_[j], beta_[j], t);
    expired_[j] = 0;
    for (int u : expiry_sets_[j]) {
      const auto uu = static_cast<std::size_t>(u - 1);
      // Expiry sets of different slots are disjoint, so no batch retires twice.
      if (retired_[j][uu]) throw Error("batch from slot " + std::to_string(u) + " expired twice");
      retired_[j][uu] = true;
      expired_[j] += powered_up_[uu][j];
    }
    current_[j] -= expired_[j];
  }
  powered_up_.push_back(top_up(current_, target));
  return current_;
}

std::vector<int> IdleBudgetPolicy::live_total() const {
  std::vector<int> total(beta_.size(), 0);
  for (std::size_t j = 0; j < beta_.size(); ++j) {
    for (std::size_t u = 0; u < powered_up_.size(); ++u) {
      if (!retired_[j][u]) total[j] += powered_up_[u][j];
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

std::string to_string(OnlineAlgorithm alg) {
  switch (alg) {
    case OnlineAlgorithm::A:
      return "A";
    case OnlineAlgorithm::B:
      return "B";
    case OnlineAlgorithm::C:
      return "C";
  }
  return "?";
}

namespace {

std::vector<int> dwell_times(const std::vector<double>& beta, const std::vector<CostFunction>& costs, int horizon) {
  std::vector<int> dwell;
  for (std::size_t j = 0; j < beta.size(); ++j) dwell.push_back(fixed_dwell(beta[j], costs[j].idle(), horizon));
  return dwell;
}

}  // namespace

AlgorithmA::AlgorithmA(std::vector<double> beta, std::vector<int> fleet, std::vector<CostFunction> costs, int horizon,
                       const OnlineOptions& options)
    : costs_(std::move(costs)),
      dwell_(dwell_times(beta, costs_, horizon)),
      prefix_(beta, std::move(fleet), options.prefix_gamma, options.execution),
      policy_(dwell_) {}

ServerConfig AlgorithmA::step(double volume, std::span<const CostFunction> costs) {
  if (!std::equal(costs.begin(), costs.end(), costs_.begin(), costs_.end())) {
    throw ParameterError("algorithm A needs time-independent cost functions (slot " +
                         std::to_string(records_.size() + 1) + " differs)");
  }
  const auto prefix = prefix_.feed(volume, costs);
  const auto& x = policy_.step(prefix.config.counts());
  records_.push_back({prefix.config, ServerConfig(x), policy_.last_powered_up(), policy_.last_expired(), prefix.cost});
  return ServerConfig(x);
}

AlgorithmB::AlgorithmB(std::vector<double> beta, std::vector<int> fleet, const OnlineOptions& options)
    : prefix_(beta, std::move(fleet), options.prefix_gamma, options.execution), policy_(std::move(beta)) {}

ServerConfig AlgorithmB::step(double volume, std::span<const CostFunction> costs) {
  const auto prefix = prefix_.feed(volume, costs);
  const auto& x = policy_.step(prefix.config.counts(), idle_costs(costs));
  records_.push_back({prefix.config, ServerConfig(x), policy_.last_powered_up(), policy_.last_expired(), prefix.cost});
  return ServerConfig(x);
}

// ---------------------------------------------------------------------------

int sub_slot_count(std::span<const double> idle, std::span<const double> beta, double epsilon) {
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be > 0");
  double worst = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j) worst = std::max(worst, idle[j] / beta[j]);
  const double n = std::ceil(static_cast<double>(beta.size()) / epsilon * worst);
  if (n > static_cast<double>(std::numeric_limits<int>::max())) {
    throw CapacityLimitError("sub-slot count overflows: " + std::to_string(n));
  }
  return std::max(1, static_cast<int>(n));
}

AlgorithmC::AlgorithmC(std::vector<double> beta, std::vector<int> fleet, const OnlineOptions& options)
    : beta_(beta), fleet_(fleet), options_(options), inner_(std::move(beta), std::move(fleet), options) {
  if (!(options.epsilon > 0.0)) throw ParameterError("algorithm C needs epsilon > 0");
}

ServerConfig AlgorithmC::step(double volume, std::span<const CostFunction> costs) {
  const int n = sub_slot_count(idle_costs(costs), beta_, options_.epsilon);
  if (sub_volumes_.size() + static_cast<std::size_t>(n) > options_.max_sub_slots) {
    throw CapacityLimitError("algorithm C exceeds " + std::to_string(options_.max_sub_slots) + " sub-slots");
  }
  std::vector<CostFunction> scaled;
  for (const auto& f : costs) scaled.push_back(f.scaled(1.0 / n));

  int chosen = 0;
  double best = kInfiniteCost;
  const std::size_t first = inner_schedule_.configs.size();
  for (int u = 0; u < n; ++u) {
    const ServerConfig x = inner_.step(volume, scaled);
    const double g = operating_cost(x.counts(), volume, scaled);
    if (u == 0 || g < best) {
      best = g;
      chosen = u;
    }
    inner_schedule_.configs.push_back(x);
    inner_prefix_.push_back(inner_.records().back().prefix_config);
    sub_costs_.push_back(scaled);
    sub_volumes_.push_back(volume);
  }

  const auto pick = first + static_cast<std::size_t>(chosen);
  const ServerConfig& x = inner_schedule_.configs[pick];
  const std::vector<int> prev = records_.empty() ? std::vector<int>(beta_.size(), 0) : records_.back().config.counts();
  OnlineSlotRecord rec;
  rec.prefix_config = inner_prefix_[pick];
  rec.config = x;
  rec.prefix_cost = inner_.records()[pick].prefix_cost;
  rec.sub_slots = n;
  rec.chosen_sub = chosen;
  for (std::size_t j = 0; j < beta_.size(); ++j) {
    rec.powered_up.push_back(std::max(x[j] - prev[j], 0));
    rec.expired.push_back(std::max(prev[j] - x[j], 0));
  }
  records_.push_back(std::move(rec));
  return x;
}

ProblemInstance AlgorithmC::expanded_instance() const {
  const int slots = static_cast<int>(sub_volumes_.size());
  return {slots, static_cast<int>(beta_.size()), beta_, {fleet_}, sub_costs_, sub_volumes_};
}

// ---------------------------------------------------------------------------

double idle_ratio_constant(const ProblemInstance& instance) {
  double total = 0.0;
  for (int j = 0; j < instance.types(); ++j) {
    double worst = 0.0;
    for (int t = 0; t < instance.horizon(); ++t) worst = std::max(worst, instance.idle_cost(t, j) / instance.beta(j));
    total += worst;
  }
  return total;
}

bool is_load_independent(const ProblemInstance& instance) {
  for (const auto& row : instance.cost_rows()) {
    for (const auto& f : row) {
      if (!f.is_load_independent()) return false;
    }
  }
  return true;
}

double competitive_bound(const ProblemInstance& instance, OnlineAlgorithm alg, double epsilon) {
  const double base = 2.0 * instance.types() + 1.0;
  switch (alg) {
    case OnlineAlgorithm::A:
      return is_load_independent(instance) ? base - 1.0 : base;
    case OnlineAlgorithm::B:
      return base + idle_ratio_constant(instance);
    case OnlineAlgorithm::C:
      return base + epsilon;
  }
  return base;
}

double competitive_ratio(double cost, double optimum) {
  if (optimum == 0.0) return cost == 0.0 ? 1.0 : kInfiniteCost;
  return cost / optimum;
}

OnlineRunResult run_online(const ProblemInstance& instance, OnlineAlgorithm alg, const OnlineOptions& options,
                           bool audit) {
  require_valid(instance);
  if (instance.fleet_varies()) throw ParameterError("online algorithms need a fleet that is constant over time");
  if (alg == OnlineAlgorithm::A && !instance.is_time_independent()) {
    throw ParameterError("algorithm A needs time-independent cost functions");
  }
  if (alg == OnlineAlgorithm::C && !(options.epsilon > 0.0)) throw ParameterError("algorithm C needs epsilon > 0");

  const auto fleet_span = instance.fleet_at(0);
  std::vector<int> fleet(fleet_span.begin(), fleet_span.end());
  std::unique_ptr<OnlineScheduler> scheduler;
  AlgorithmC* c_impl = nullptr;
  switch (alg) {
    case OnlineAlgorithm::A: {
      const auto costs = instance.costs_at(0);
      scheduler = std::make_unique<AlgorithmA>(instance.betas(), fleet, std::vector<CostFunction>(costs.begin(), costs.end()),
                                               instance.horizon(), options);
      break;
    }
    case OnlineAlgorithm::B:
      scheduler = std::make_unique<AlgorithmB>(instance.betas(), fleet, options);
      break;
    case OnlineAlgorithm::C: {
      auto c = std::make_unique<AlgorithmC>(instance.betas(), fleet, options);
      c_impl = c.get();
      scheduler = std::move(c);
      break;
    }
  }

  OnlineRunResult result;
  result.algorithm = alg;
  for (int t = 0; t < instance.horizon(); ++t) {
    result.schedule.configs.push_back(scheduler->step(instance.volume(t), instance.costs_at(t)));
  }
  result.records = scheduler->records();
  result.cost = schedule_cost(result.schedule, instance);
  result.bound = competitive_bound(instance, alg, options.epsilon);
  if (c_impl != nullptr) result.inner_cost = schedule_cost(c_impl->inner_schedule(), c_impl->expanded_instance()).grand_total;

  if (audit) {
    DpOptions dp;
    dp.track_paths = false;
    dp.execution = options.execution;
    result.optimum = solve_offline(instance, dp).cost;
    result.ratio = competitive_ratio(result.cost.grand_total, *result.optimum);
    result.bound_violated = !(*result.ratio <= result.bound * (1.0 + 1e-6));
  }
  return result;
}

}  // namespace rightsize
