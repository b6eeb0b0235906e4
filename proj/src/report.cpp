#include "rightsize/report.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "format.hpp"
#include "rightsize/approx.hpp"
#include "rightsize/online.hpp"

namespace rightsize {

namespace {


using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string optional_cell(const std::optional<double>& v) { return v ? detail::compact(*v) : std::string(); }

}  // namespace

std::vector<RunReport> compare_all(const ProblemInstance& instance, const CompareOptions& options) {
  require_valid(instance);
  std::vector<std::function<RunReport()>> jobs;

  jobs.emplace_back([&] {
    RunReport r;
    r.algorithm = "exact";
    const auto start = Clock::now();
    auto result = solve_offline(instance, options.dp);
    r.wall_seconds = seconds_since(start);
    r.schedule = *result.schedule;
    r.cost = *result.breakdown;
    return r;
  });
  for (double eps : options.epsilons) {
    jobs.emplace_back([&, eps] {
      RunReport r;
      r.algorithm = "approx";
      r.epsilon = eps;
      const auto start = Clock::now();
      auto result = solve_approx(instance, eps, options.dp);
      r.wall_seconds = seconds_since(start);
      r.gamma = result.gamma;
      r.bound = 2.0 * result.gamma - 1.0;
      r.schedule = *result.offline.schedule;
      r.cost = *result.offline.breakdown;
      return r;
    });
  }
  if (!instance.fleet_varies()) {
    std::vector<OnlineAlgorithm> algs;
    if (instance.is_time_independent()) algs.push_back(OnlineAlgorithm::A);
    algs.push_back(OnlineAlgorithm::B);
    algs.push_back(OnlineAlgorithm::C);
    for (auto alg : algs) {
      jobs.emplace_back([&, alg] {
        OnlineOptions online;
        online.epsilon = options.online_epsilon;
        online.execution = options.dp.execution;
        RunReport r;
        r.algorithm = to_string(alg);
        if (alg == OnlineAlgorithm::C) r.epsilon = options.online_epsilon;
        const auto start = Clock::now();
        auto result = run_online(instance, alg, online, false);
        r.wall_seconds = seconds_since(start);
        r.bound = result.bound;
        r.schedule = std::move(result.schedule);
        r.cost = std::move(result.cost);
        return r;
      });
    }
  }

  std::vector<RunReport> runs;
  if (options.concurrent) {
    std::vector<std::future<RunReport>> pending;
    for (auto& job : jobs) pending.push_back(std::async(std::launch::async, job));
    for (auto& f : pending) runs.push_back(f.get());
  } else {
    for (auto& job : jobs) runs.push_back(job());
  }

  const double opt = runs.front().cost.grand_total;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    auto& r = runs[i];
    r.run_id = static_cast<int>(i) + 1;
    r.optimum = opt;
    r.ratio = competitive_ratio(r.cost.grand_total, opt);
    if (r.bound) r.bound_violated = !(r.ratio <= *r.bound * (1.0 + 1e-6));
  }
  return runs;
}

std::string runs_csv(const std::vector<RunReport>& runs, bool timing) {
  using detail::fixed9;
  std::ostringstream out;
  out << "run_id,algorithm,epsilon,gamma,operating_total,switching_total,grand_total,opt_cost,ratio,bound,bound_violated";
  if (timing) out << ",wall_seconds";
  out << '\n';
  for (const auto& r : runs) {
    out << r.run_id << ',' << r.algorithm << ',' << optional_cell(r.epsilon) << ',' << optional_cell(r.gamma) << ','
        << fixed9(r.cost.operating_total) << ',' << fixed9(r.cost.switching_total) << ',' << fixed9(r.cost.grand_total)
        << ',' << fixed9(r.optimum) << ',' << fixed9(r.ratio) << ',' << optional_cell(r.bound) << ','
        << (r.bound_violated ? 1 : 0);
    if (timing) out << ',' << fixed9(r.wall_seconds);
    out << '\n';
  }
  return out.str();
}

std::string slots_csv(const std::vector<RunReport>& runs, const ProblemInstance& instance) {
  std::ostringstream out;
  out << "run_id,algorithm,t,j,x_opt,x_alg,lambda\n";
  if (runs.empty()) return out.str();
  const auto& opt = runs.front().schedule;
  for (const auto& r : runs) {
    for (std::size_t t = 0; t < r.schedule.configs.size(); ++t) {
      for (std::size_t j = 0; j < r.schedule.configs[t].size(); ++j) {
        out << r.run_id << ',' << r.algorithm << ',' << (t + 1) << ',' << (j + 1) << ',' << opt.configs[t][j] << ','
            << r.schedule.configs[t][j] << ',' << detail::compact(instance.volume(static_cast<int>(t))) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace rightsize
