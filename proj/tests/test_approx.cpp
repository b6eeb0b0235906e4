#include <doctest.h>

#include <cmath>
#include <set>

#include "rightsize/approx.hpp"
#include "rightsize/errors.hpp"
#include "support.hpp"

using namespace rightsize;

namespace {

// Consecutive a < b with a >= 1 satisfy b <= max(gamma a, a + 1): once
// gamma a < a + 1 there is no integer strictly between the two.
void check_grid(int m, double gamma) {
  const auto g = build_gamma_grid(m, gamma);
  REQUIRE(!g.empty());
  CHECK(g.front() == 0);
  CHECK(g.back() == m);
  if (m >= 1) CHECK(g[1] == 1);
  for (std::size_t i = 1; i < g.size(); ++i) {
    REQUIRE(g[i - 1] < g[i]);
    if (g[i - 1] >= 1) CHECK(g[i] <= std::max(gamma * g[i - 1], g[i - 1] + 1.0) + 1e-9);
  }
  if (m >= 2) CHECK(g.size() <= 2 * static_cast<std::size_t>(std::ceil(std::log(m) / std::log(gamma))) + 3);
}

}  // namespace

TEST_SUITE("approx") {

TEST_CASE("geometric grids") {
  CHECK(build_gamma_grid(10, 2.0) == std::vector<int>{0, 1, 2, 4, 8, 10});
  CHECK(build_gamma_grid(5, 1.5) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(build_gamma_grid(1, 1.5) == std::vector<int>{0, 1});
  CHECK(build_gamma_grid(0, 1.5) == std::vector<int>{0});
  CHECK(build_gamma_grid(100, 10.0) == std::vector<int>{0, 1, 10, 100});
  CHECK_THROWS_AS(build_gamma_grid(10, 1.0), ParameterError);
  CHECK_THROWS_AS(build_gamma_grid(10, 0.5), ParameterError);
  CHECK(gamma_for_epsilon(1.0) == 1.5);
}

TEST_CASE("grid ratio bound") {
  for (double gamma : {1.1, 1.5, 2.0}) {
    for (int m = 0; m <= 3000; ++m) check_grid(m, gamma);
    Rng rng(static_cast<std::uint64_t>(gamma * 10));
    for (int i = 0; i < 300; ++i) check_grid(rng.integer(3000, 1'000'000), gamma);
    check_grid(1'000'000, gamma);
  }
}

TEST_CASE("the plain ratio bound holds once the gaps exceed one") {
  // b <= gamma a can only fail where gamma a < a + 1.
  for (double gamma : {1.1, 1.5, 2.0}) {
    const auto g = build_gamma_grid(1'000'000, gamma);
    for (std::size_t i = 2; i < g.size(); ++i) {
      if (g[i - 1] >= 1.0 / (gamma - 1.0)) CHECK(g[i] <= gamma * g[i - 1] + 1e-9);
    }
  }
}

TEST_CASE("binary fleets lose nothing") {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    TinyOptions opt;
    opt.max_fleet = 1;
    opt.time_dependent = i % 2 == 0;
    const auto inst = random_tiny_instance(rng, opt);
    CHECK(solve_approx(inst, 0.5).offline.cost == solve_offline(inst).cost);
  }
}

TEST_CASE("approximation factor and sandwich") {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    TinyOptions opt;
    opt.max_fleet = 12;
    opt.time_dependent = i % 2 == 0;
    opt.vary_fleet = i % 5 == 0;
    const auto inst = random_tiny_instance(rng, opt);
    const double exact = solve_offline(inst).cost;
    for (double eps : {0.25, 0.5, 1.0}) {
      const auto r = solve_approx(inst, eps);
      CHECK(r.gamma == 1.0 + eps / 2.0);
      CHECK(r.offline.cost <= (1.0 + eps) * exact + 1e-9);
      CHECK(r.offline.cost >= exact - 1e-9);
      CHECK(is_feasible(*r.offline.schedule, inst).feasible);
      CHECK(costs_close(schedule_cost(*r.offline.schedule, inst).grand_total, r.offline.cost));
    }
  }
}

TEST_CASE("gamma 2 schedules stay on the grid") {
  Rng rng(3);
  const std::set<int> allowed{0, 1, 2, 4, 8, 10};
  for (int i = 0; i < 20; ++i) {
    std::vector<double> volumes;
    for (int t = 0; t < 6; ++t) volumes.push_back(rng.uniform(0.0, 9.0));
    auto inst = ProblemInstance::time_independent({rng.uniform(1, 5)}, {10}, {CostFunction::affine(0.5, 1, 1)}, volumes);
    const auto r = solve_gamma(inst, 2.0);
    for (const auto& x : r.offline.schedule->configs) CHECK(allowed.contains(x[0]));
    CHECK(is_feasible(*r.offline.schedule, inst).feasible);
  }
}

TEST_CASE("a grid that covers every count reproduces the exact solve") {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    TinyOptions opt;
    opt.max_fleet = 4;
    opt.time_dependent = true;
    const auto inst = random_tiny_instance(rng, opt);
    const auto exact = solve_offline(inst);
    const auto approx = solve_approx(inst, 1e-3);
    CHECK(approx.offline.cost == exact.cost);
    CHECK(*approx.offline.schedule == *exact.schedule);
  }
}

TEST_CASE("epsilon must be positive") {
  Rng rng(5);
  const auto inst = random_tiny_instance(rng);
  CHECK_THROWS_AS(solve_approx(inst, 0.0), ParameterError);
  CHECK_THROWS_AS(solve_approx(inst, -1.0), ParameterError);
}

}  // TEST_SUITE
