#include "rightsize/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rightsize/errors.hpp"

namespace rightsize {

namespace {

double round6(double v) { return std::round(v * 1e6) / 1e6; }

}  // namespace

CostFunction random_cost_function(Rng& rng, bool load_independent) {
  const double z_max = round6(rng.uniform(0.5, 2.0));
  const double idle = rng.chance(0.15) ? 0.0 : round6(rng.uniform(0.2, 3.0));
  if (load_independent) return CostFunction::affine(idle, 0.0, z_max);
  switch (rng.integer(0, 2)) {
    case 0:
      return CostFunction::affine(idle, round6(rng.uniform(0.0, 3.0)), z_max);
    case 1:
      return CostFunction::power(idle, round6(rng.uniform(0.1, 3.0)), round6(rng.uniform(1.0, 3.0)), z_max);
    default: {
      std::vector<Breakpoint> points{{0.0, idle}};
      const int pieces = rng.integer(1, 3);
      double z = 0.0;
      double value = idle;
      double slope = rng.uniform(0.0, 1.0);
      for (int k = 0; k < pieces; ++k) {
        z = round6(z + z_max / pieces);
        value = round6(value + slope * (z_max / pieces));
        points.push_back({z, value});
        slope += rng.uniform(0.0, 2.0);
      }
      return CostFunction::piecewise(std::move(points), z_max);
    }
  }
}

namespace {

double slot_capacity(std::span<const int> fleet, std::span<const CostFunction> costs) {
  double cap = 0.0;
  for (std::size_t j = 0; j < fleet.size(); ++j) cap += fleet[j] * costs[j].z_max();
  return cap;
}

}  // namespace

LoadProfile parse_profile(const std::string& name) {
  if (name == "sinusoidal") return LoadProfile::sinusoidal;
  if (name == "bursty") return LoadProfile::bursty;
  if (name == "constant") return LoadProfile::constant;
  throw ParameterError("unknown profile '" + name + "' (sinusoidal, bursty, constant)");
}

std::string to_string(LoadProfile profile) {
  switch (profile) {
    case LoadProfile::sinusoidal: return "sinusoidal";
    case LoadProfile::bursty: return "bursty";
    case LoadProfile::constant: return "constant";
  }
  return "?";
}

ProblemInstance generate_instance(const GenOptions& options) {
  if (options.horizon < 1 || options.types < 1 || options.fleet < 1) {
    throw ParameterError("gen needs T >= 1, d >= 1 and m >= 1");
  }
  Rng rng(options.seed);
  const auto d = static_cast<std::size_t>(options.types);
  std::vector<double> beta;
  std::vector<CostFunction> base;
  for (std::size_t j = 0; j < d; ++j) {
    beta.push_back(round6(rng.uniform(2.0, 12.0)));
    const double idle = round6(rng.uniform(0.5, 2.0));
    const double z_max = round6(rng.uniform(0.5, 2.0));
    const double b = round6(rng.uniform(0.5, 3.0));
    if (j % 2 == 0) {
      base.push_back(CostFunction::affine(idle, b, z_max));
    } else {
      base.push_back(CostFunction::power(idle, b, round6(rng.uniform(1.5, 3.0)), z_max));
    }
  }
  const std::vector<int> fleet(d, options.fleet);
  const double cap = slot_capacity(fleet, base);
  const double peak = 0.9 * cap;

  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  std::vector<double> volumes;
  for (int t = 0; t < options.horizon; ++t) {
    double v = 0.0;
    switch (options.profile) {
      case LoadProfile::sinusoidal:
        v = peak * (0.5 + 0.45 * std::sin(2.0 * std::numbers::pi * t / 24.0 + phase)) * rng.uniform(0.9, 1.0);
        break;
      case LoadProfile::bursty:
        v = rng.chance(0.2) ? peak * rng.uniform(0.5, 1.0) : peak * rng.uniform(0.0, 0.2);
        break;
      case LoadProfile::constant:
        v = 0.5 * peak;
        break;
    }
    volumes.push_back(round6(std::clamp(v, 0.0, peak)));
  }

  if (!options.time_dependent) return ProblemInstance::time_independent(beta, fleet, base, volumes);

  ProblemInstance::CostRows rows;
  for (int t = 0; t < options.horizon; ++t) {
    const double price = 1.0 + 0.5 * std::cos(2.0 * std::numbers::pi * t / 24.0 + phase);
    std::vector<CostFunction> row;
    for (const auto& f : base) row.push_back(f.scaled(round6(price)));
    rows.push_back(std::move(row));
  }
  return {options.horizon, options.types, beta, {fleet}, std::move(rows), volumes};
}

ProblemInstance random_tiny_instance(Rng& rng, const TinyOptions& options) {
  const int T = rng.integer(1, options.max_horizon);
  const int d = rng.integer(1, options.max_types);
  const auto dd = static_cast<std::size_t>(d);

  std::vector<double> beta;
  for (int j = 0; j < d; ++j) beta.push_back(round6(rng.uniform(0.5, 6.0)));

  ProblemInstance::FleetRows fleet;
  // A single stored row means a constant fleet, which must be >= 1.
  if (options.vary_fleet && T > 1) {
    for (int t = 0; t < T; ++t) {
      std::vector<int> row;
      for (int j = 0; j < d; ++j) row.push_back(rng.integer(0, options.max_fleet));
      if (std::all_of(row.begin(), row.end(), [](int m) { return m == 0; })) row[0] = 1;
      fleet.push_back(std::move(row));
    }
  } else {
    std::vector<int> row;
    for (int j = 0; j < d; ++j) row.push_back(rng.integer(1, options.max_fleet));
    fleet.push_back(std::move(row));
  }

  ProblemInstance::CostRows costs;
  const int cost_rows = options.time_dependent ? T : 1;
  for (int t = 0; t < cost_rows; ++t) {
    std::vector<CostFunction> row;
    for (std::size_t j = 0; j < dd; ++j) row.push_back(random_cost_function(rng, options.load_independent));
    costs.push_back(std::move(row));
  }

  std::vector<double> volumes;
  for (int t = 0; t < T; ++t) {
    const auto& f = costs[options.time_dependent ? static_cast<std::size_t>(t) : 0];
    const auto& m = fleet[fleet.size() > 1 ? static_cast<std::size_t>(t) : 0];
    const double cap = slot_capacity(m, f);
    volumes.push_back(rng.chance(0.2) ? 0.0 : round6(rng.uniform(0.0, 0.9 * cap)));
  }
  return {T, d, std::move(beta), std::move(fleet), std::move(costs), std::move(volumes)};
}

}  // namespace rightsize
