#include "rightsize/allocation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>

namespace rightsize {

namespace {

constexpr int kMaxBisectionSteps = 200;
constexpr int kMaxBracketDoublings = 1100;

struct Item {
  double slope;
  std::size_t type;
  double volume;
};

double volume_tolerance(double volume) { return 1e-9 * std::max(1.0, volume); }

// Sum of x_j f_j(v_j / x_j), with v_j / x_j clamped to z_max against rounding.
double split_cost(std::span<const int> servers, std::span<const double> volumes,
                  std::span<const CostFunction> costs) {
  double total = 0.0;
  for (std::size_t j = 0; j < servers.size(); ++j) {
    if (servers[j] == 0) continue;
    const double load = std::min(volumes[j] / servers[j], costs[j].z_max());
    total += servers[j] * costs[j](std::max(load, 0.0));
  }
  return total;
}

std::vector<double> fill_by_slope(std::span<const int> servers, double volume,
                                  std::span<const CostFunction> costs) {
  std::vector<Item> items;
  for (std::size_t j = 0; j < servers.size(); ++j) {
    if (servers[j] == 0) continue;
    for (const auto& seg : costs[j].segments()) {
      items.push_back({seg.slope, j, servers[j] * (seg.end - seg.begin)});
    }
  }
  // Stable: equal slopes fill in type order, then segment order.
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.slope < b.slope; });
  std::vector<double> v(servers.size(), 0.0);
  double remaining = volume;
  for (const auto& item : items) {
    if (remaining <= 0.0) break;
    const double take = std::min(remaining, item.volume);
    v[item.type] += take;
    remaining -= take;
  }
  return v;
}

class MarginalSplit {
 public:
  MarginalSplit(std::span<const int> servers, std::span<const CostFunction> costs)
      : servers_(servers), costs_(costs) {}

  // Total volume range [low, high] whose marginal cost equals `threshold`.
  std::pair<double, double> volume_at(double threshold) const {
    double low = 0.0;
    double high = 0.0;
    for (std::size_t j = 0; j < servers_.size(); ++j) {
      if (servers_[j] == 0) continue;
      const auto [lo, hi] = costs_[j].loads_at_marginal_cost(threshold);
      low += servers_[j] * lo;
      high += servers_[j] * hi;
    }
    return {low, high};
  }

  // Per-type volumes at `threshold`, corrected to sum exactly to `volume`:
  // shortfall goes to plateau room then to spare capacity in index order,
  // overshoot is removed in reverse index order.
  std::vector<double> assign(double threshold, double volume) const {
    const std::size_t d = servers_.size();
    std::vector<double> v(d, 0.0);
    std::vector<double> plateau(d, 0.0);
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      if (servers_[j] == 0) continue;
      const auto [lo, hi] = costs_[j].loads_at_marginal_cost(threshold);
      v[j] = servers_[j] * lo;
      plateau[j] = servers_[j] * (hi - lo);
      sum += v[j];
    }
    double residual = volume - sum;
    for (std::size_t j = 0; j < d && residual > 0.0; ++j) {
      const double add = std::min(residual, plateau[j]);
      v[j] += add;
      residual -= add;
    }
    for (std::size_t j = 0; j < d && residual > 0.0; ++j) {
      const double room = servers_[j] * costs_[j].z_max() - v[j];
      const double add = std::min(residual, std::max(room, 0.0));
      v[j] += add;
      residual -= add;
    }
    for (std::size_t j = d; j-- > 0 && residual < 0.0;) {
      const double cut = std::min(-residual, v[j]);
      v[j] -= cut;
      residual += cut;
    }
    return v;
  }

 private:
  std::span<const int> servers_;
  std::span<const CostFunction> costs_;
};

std::vector<double> split_by_bisection(std::span<const int> servers, double volume,
                                       std::span<const CostFunction> costs) {
  const MarginalSplit split(servers, costs);
  const double tol = volume_tolerance(volume);
  auto brackets = [&](double threshold) {
    const auto [low, high] = split.volume_at(threshold);
    return low <= volume + tol && high >= volume - tol;
  };

  // Kinks of the linear pieces are where plateaus live; try them first.
  std::vector<double> kinks;
  double upper = 0.0;
  for (std::size_t j = 0; j < servers.size(); ++j) {
    if (servers[j] == 0) continue;
    upper = std::max(upper, costs[j].marginal_cost_at_capacity());
    if (costs[j].is_piecewise_linear()) {
      for (const auto& seg : costs[j].segments()) kinks.push_back(seg.slope);
    }
  }
  std::sort(kinks.begin(), kinks.end());
  for (double k : kinks) {
    if (brackets(k)) return split.assign(k, volume);
  }

  // A bracket proportional to the marginal costs keeps the search scale-equivariant.
  if (upper <= 0.0) upper = 1.0;
  double lo = -upper;
  double hi = upper;
  for (int i = 0; i < kMaxBracketDoublings && split.volume_at(hi).second < volume; ++i) hi *= 2.0;

  for (int i = 0; i < kMaxBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const auto [low, high] = split.volume_at(mid);
    if (low <= volume + tol && high >= volume - tol) return split.assign(mid, volume);
    if (high < volume) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return split.assign(hi, volume);
}

}  // namespace

double eval_g_single(int servers, double fraction, double volume, const CostFunction& f) {
  assert(servers >= 0 && fraction >= 0.0 && volume >= 0.0);
  const double load = volume * fraction;
  if (servers == 0) return load > 0.0 ? kInfiniteCost : 0.0;
  const double per_server = load / servers;
  if (exceeds_capacity(per_server, f.z_max())) return kInfiniteCost;
  return servers * f(std::min(per_server, f.z_max()));
}

AllocationResult eval_g_total(std::span<const int> servers, double volume, std::span<const CostFunction> costs) {
  assert(servers.size() == costs.size());
  const std::size_t d = servers.size();
  AllocationResult result;

  double capacity = 0.0;
  for (std::size_t j = 0; j < d; ++j) capacity += servers[j] * costs[j].z_max();
  if (exceeds_capacity(volume, capacity)) return result;

  if (volume == 0.0) {
    result.fractions.assign(d, 0.0);
    result.volumes.assign(d, 0.0);
    const auto first = std::find_if(servers.begin(), servers.end(), [](int x) { return x > 0; });
    if (first != servers.end()) result.fractions[static_cast<std::size_t>(first - servers.begin())] = 1.0;
    result.cost = split_cost(servers, result.volumes, costs);
    return result;
  }

  bool linear = true;
  for (std::size_t j = 0; j < d; ++j) {
    if (servers[j] > 0 && !costs[j].is_piecewise_linear()) linear = false;
  }
  result.volumes = linear ? fill_by_slope(servers, volume, costs) : split_by_bisection(servers, volume, costs);
  result.fractions.resize(d);
  for (std::size_t j = 0; j < d; ++j) result.fractions[j] = result.volumes[j] / volume;
  result.cost = split_cost(servers, result.volumes, costs);
  return result;
}

double operating_cost(std::span<const int> servers, double volume, std::span<const CostFunction> costs) {
  return eval_g_total(servers, volume, costs).cost;
}

}  // namespace rightsize
