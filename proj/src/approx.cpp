#include "rightsize/approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rightsize/errors.hpp"

namespace rightsize {

std::vector<int> build_gamma_grid(int m, double gamma) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) throw ParameterError("gamma must be > 1, got " + std::to_string(gamma));
  if (m < 0) throw ParameterError("fleet size must be >= 0, got " + std::to_string(m));
  std::vector<int> values{0};
  if (m == 0) return values;
  values.push_back(1);
  values.push_back(m);
  const double limit = static_cast<double>(m);
  auto add = [&](double v) {
    if (v <= limit) values.push_back(static_cast<int>(v));
  };
  for (double power = gamma; power <= limit; power *= gamma) {
    add(std::floor(power));
    add(std::ceil(power));
    // Iterated products drift; an intended integer power must not be lost.
    const double nearest = std::round(power);
    if (std::abs(power - nearest) < 1e-9) add(nearest);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

double gamma_for_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ParameterError("epsilon must be > 0, got " + std::to_string(epsilon));
  return 1.0 + epsilon / 2.0;
}

std::vector<std::shared_ptr<const ConfigGrid>> gamma_grids(const ProblemInstance& instance, double gamma) {
  std::vector<std::shared_ptr<const ConfigGrid>> grids;
  for (int t = 0; t < instance.horizon(); ++t) {
    if (!instance.fleet_per_slot() && !grids.empty()) {
      grids.push_back(grids.back());
      continue;
    }
    std::vector<std::vector<int>> axes;
    for (int m : instance.fleet_at(t)) axes.push_back(build_gamma_grid(m, gamma));
    grids.push_back(std::make_shared<const ConfigGrid>(std::move(axes)));
  }
  return grids;
}

ApproxResult solve_gamma(const ProblemInstance& instance, double gamma, const DpOptions& options) {
  require_valid(instance);
  const auto grids = gamma_grids(instance, gamma);
  return {solve_on_grids(instance, grids, options), gamma};
}

ApproxResult solve_approx(const ProblemInstance& instance, double epsilon, const DpOptions& options) {
  return solve_gamma(instance, gamma_for_epsilon(epsilon), options);
}

}  // namespace rightsize
