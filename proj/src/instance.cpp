#include "rightsize/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "format.hpp"
#include "rightsize/allocation.hpp"
#include "rightsize/errors.hpp"

namespace rightsize {

using detail::compact;

bool ServerConfig::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](int x) { return x == 0; });
}

ProblemInstance::ProblemInstance(int horizon, int types, std::vector<double> beta, FleetRows fleet, CostRows costs,
                                 std::vector<double> volumes)
    : horizon_(horizon),
      types_(types),
      beta_(std::move(beta)),
      fleet_(std::move(fleet)),
      costs_(std::move(costs)),
      volumes_(std::move(volumes)) {}

ProblemInstance ProblemInstance::time_independent(std::vector<double> beta, std::vector<int> fleet,
                                                  std::vector<CostFunction> costs, std::vector<double> volumes) {
  const int horizon = static_cast<int>(volumes.size());
  const int types = static_cast<int>(beta.size());
  return {horizon, types, std::move(beta), {std::move(fleet)}, {std::move(costs)}, std::move(volumes)};
}

std::span<const int> ProblemInstance::fleet_at(int t) const {
  return fleet_.size() == 1 ? fleet_.front() : fleet_[static_cast<std::size_t>(t)];
}

std::span<const CostFunction> ProblemInstance::costs_at(int t) const {
  return costs_.size() == 1 ? costs_.front() : costs_[static_cast<std::size_t>(t)];
}

bool ProblemInstance::fleet_varies() const {
  return std::any_of(fleet_.begin(), fleet_.end(), [&](const auto& row) { return row != fleet_.front(); });
}

bool ProblemInstance::is_time_independent() const {
  return std::all_of(costs_.begin(), costs_.end(), [&](const auto& row) { return row == costs_.front(); });
}

double ProblemInstance::capacity(int t) const {
  double total = 0.0;
  const auto fleet = fleet_at(t);
  const auto costs = costs_at(t);
  for (int j = 0; j < types_; ++j) total += fleet[static_cast<std::size_t>(j)] * costs[static_cast<std::size_t>(j)].z_max();
  return total;
}

ProblemInstance ProblemInstance::prefix(int slots) const {
  const auto n = static_cast<std::size_t>(slots);
  FleetRows fleet = fleet_per_slot() ? FleetRows(fleet_.begin(), fleet_.begin() + slots) : fleet_;
  CostRows costs = costs_per_slot() ? CostRows(costs_.begin(), costs_.begin() + slots) : costs_;
  std::vector<double> volumes(volumes_.begin(), volumes_.begin() + static_cast<std::ptrdiff_t>(n));
  return {slots, types_, beta_, std::move(fleet), std::move(costs), std::move(volumes)};
}

ProblemInstance ProblemInstance::expanded() const {
  FleetRows fleet;
  CostRows costs;
  for (int t = 0; t < horizon_; ++t) {
    const auto f = fleet_at(t);
    const auto c = costs_at(t);
    fleet.emplace_back(f.begin(), f.end());
    costs.emplace_back(c.begin(), c.end());
  }
  return {horizon_, types_, beta_, std::move(fleet), std::move(costs), volumes_};
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) out << (i ? "\n" : "") << violations[i];
  return out.str();
}

ValidationReport validate_instance(const ProblemInstance& instance) {
  ValidationReport report;
  auto& v = report.violations;
  const int T = instance.horizon();
  const int d = instance.types();
  if (T < 1) v.push_back("T must be >= 1, got " + std::to_string(T));
  if (d < 1) v.push_back("d must be >= 1, got " + std::to_string(d));
  if (!v.empty()) return report;

  bool dims_ok = true;
  auto dim = [&](bool ok, const std::string& what) {
    if (!ok) {
      v.push_back("dimension mismatch: " + what);
      dims_ok = false;
    }
  };
  dim(instance.volumes().size() == static_cast<std::size_t>(T),
      "lambda has " + std::to_string(instance.volumes().size()) + " entries, T = " + std::to_string(T));
  dim(instance.betas().size() == static_cast<std::size_t>(d),
      "beta has " + std::to_string(instance.betas().size()) + " entries, d = " + std::to_string(d));
  const auto& fleet = instance.fleet_rows();
  dim(fleet.size() == 1 || fleet.size() == static_cast<std::size_t>(T),
      "fleet has " + std::to_string(fleet.size()) + " rows, expected 1 or T = " + std::to_string(T));
  for (const auto& row : fleet) {
    dim(row.size() == static_cast<std::size_t>(d), "fleet row has " + std::to_string(row.size()) + " entries, d = " + std::to_string(d));
  }
  const auto& costs = instance.cost_rows();
  dim(costs.size() == 1 || costs.size() == static_cast<std::size_t>(T),
      "cost_functions has " + std::to_string(costs.size()) + " rows, expected 1 or T = " + std::to_string(T));
  for (const auto& row : costs) {
    dim(row.size() == static_cast<std::size_t>(d),
        "cost_functions row has " + std::to_string(row.size()) + " entries, d = " + std::to_string(d));
  }
  for (std::size_t j = 0; j < instance.betas().size(); ++j) {
    const double b = instance.betas()[j];
    if (!(b > 0.0) || !std::isfinite(b)) v.push_back("beta_" + std::to_string(j + 1) + " must be > 0, got " + compact(b));
  }
  if (!dims_ok) return report;

  for (std::size_t r = 0; r < fleet.size(); ++r) {
    for (int j = 0; j < d; ++j) {
      const int m = fleet[r][static_cast<std::size_t>(j)];
      // A per-slot fleet may drop to zero (maintenance); a single fleet must be >= 1.
      const int minimum = fleet.size() == 1 ? 1 : 0;
      if (m < minimum) {
        v.push_back("fleet m_" + std::to_string(j + 1) + (fleet.size() == 1 ? "" : " at slot " + std::to_string(r + 1)) +
                    " must be >= " + std::to_string(minimum) + ", got " + std::to_string(m));
      }
    }
  }
  for (std::size_t r = 0; r < costs.size(); ++r) {
    for (int j = 0; j < d; ++j) {
      for (const auto& msg : costs[r][static_cast<std::size_t>(j)].violations()) {
        std::string where = "cost function type " + std::to_string(j + 1);
        if (costs.size() != 1) where += " slot " + std::to_string(r + 1);
        v.push_back(msg + " (" + where + ")");
      }
    }
  }
  for (int t = 0; t < T; ++t) {
    const double lambda = instance.volume(t);
    if (!std::isfinite(lambda) || lambda < 0.0) {
      v.push_back("lambda_" + std::to_string(t + 1) + " must be finite and >= 0, got " + compact(lambda));
      continue;
    }
    const double cap = instance.capacity(t);
    if (exceeds_capacity(lambda, cap)) {
      v.push_back("slot " + std::to_string(t + 1) + " infeasible: capacity " + compact(cap) + " < volume " + compact(lambda));
    }
  }
  return report;
}

void require_valid(const ProblemInstance& instance) {
  const auto report = validate_instance(instance);
  if (report.ok()) return;
  const std::string msg = "invalid instance: " + report.to_string();
  for (const auto& line : report.violations) {
    if (line.starts_with("dimension mismatch")) throw DimensionError(msg);
  }
  throw InfeasibleError(msg);
}

FeasibilityResult is_feasible(const Schedule& schedule, const ProblemInstance& instance) {
  const int T = instance.horizon();
  const int d = instance.types();
  if (schedule.horizon() != static_cast<std::size_t>(T)) {
    throw DimensionError("schedule has " + std::to_string(schedule.horizon()) + " slots, instance has " + std::to_string(T));
  }
  for (int t = 0; t < T; ++t) {
    const auto& x = schedule.configs[static_cast<std::size_t>(t)];
    if (x.size() != static_cast<std::size_t>(d)) {
      throw DimensionError("slot " + std::to_string(t + 1) + ": config has " + std::to_string(x.size()) + " types, instance has " +
                           std::to_string(d));
    }
    const auto fleet = instance.fleet_at(t);
    const auto costs = instance.costs_at(t);
    double cap = 0.0;
    for (int j = 0; j < d; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const std::string name = "x_" + std::to_string(j + 1);
      if (x[jj] < 0) return {false, "slot " + std::to_string(t + 1) + ": " + name + "=" + std::to_string(x[jj]) + " < 0"};
      if (x[jj] > fleet[jj]) {
        return {false, "slot " + std::to_string(t + 1) + ": " + name + "=" + std::to_string(x[jj]) + " > m=" + std::to_string(fleet[jj])};
      }
      cap += x[jj] * costs[jj].z_max();
    }
    if (exceeds_capacity(instance.volume(t), cap)) {
      return {false, "slot " + std::to_string(t + 1) + ": capacity " + compact(cap) + " < " + compact(instance.volume(t))};
    }
  }
  return {};
}

double switching_cost(const ServerConfig& from, const ServerConfig& to, std::span<const double> beta) {
  double total = 0.0;
  for (std::size_t j = 0; j < to.size(); ++j) total += beta[j] * std::max(to[j] - from[j], 0);
  return total;
}

CostBreakdown schedule_cost(const Schedule& schedule, const ProblemInstance& instance) {
  if (const auto check = is_feasible(schedule, instance); !check) throw InfeasibleError("infeasible schedule: " + check.violation);
  CostBreakdown out;
  ServerConfig prev = ServerConfig::zeros(static_cast<std::size_t>(instance.types()));
  for (int t = 0; t < instance.horizon(); ++t) {
    const auto& x = schedule.configs[static_cast<std::size_t>(t)];
    SlotCost slot;
    slot.operating = operating_cost(x.counts(), instance.volume(t), instance.costs_at(t));
    slot.switching = switching_cost(prev, x, instance.betas());
    out.operating_total += slot.operating;
    out.switching_total += slot.switching;
    out.per_slot.push_back(slot);
    prev = x;
  }
  out.grand_total = out.operating_total + out.switching_total;
  return out;
}

bool costs_close(double a, double b, double tol) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace rightsize
