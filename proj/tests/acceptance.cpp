// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unistd.h>

#include "rightsize/allocation.hpp"
#include "rightsize/approx.hpp"
#include "rightsize/cli.hpp"
#include "rightsize/io.hpp"
#include "rightsize/offline.hpp"
#include "rightsize/online.hpp"
#include "rightsize/oracle.hpp"
#include "support.hpp"

using namespace rightsize;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Schedules checked for criterion 8, gathered from every other criterion.
struct FeasibilityLedger {
  int schedules = 0;
  int infeasible = 0;
  int online_slots = 0;
  int dominance_failures = 0;
  std::string first_problem;

  void schedule(const Schedule& s, const ProblemInstance& inst, const std::string& who) {
    ++schedules;
    const auto r = is_feasible(s, inst);
    if (!r.feasible) {
      ++infeasible;
      if (first_problem.empty()) first_problem = who + ": " + r.violation;
    }
  }
  void online(const OnlineRunResult& r, const ProblemInstance& inst) {
    schedule(r.schedule, inst, to_string(r.algorithm));
    for (const auto& rec : r.records) {
      ++online_slots;
      for (std::size_t j = 0; j < rec.config.size(); ++j) {
        if (rec.config[j] < rec.prefix_config[j]) {
          ++dominance_failures;
          if (first_problem.empty()) first_problem = to_string(r.algorithm) + ": below the prefix optimum";
        }
      }
    }
  }
};

FeasibilityLedger ledger;

std::vector<ProblemInstance> criterion1_instances() {
  Rng rng(20240601);
  std::vector<ProblemInstance> out;
  for (int i = 0; i < 200; ++i) {
    TinyOptions opt;  // T <= 4, d <= 2, m_j <= 2, mixed forms
    opt.time_dependent = i % 2 == 1;
    out.push_back(random_tiny_instance(rng, opt));
  }
  return out;
}

const std::vector<ProblemInstance>& tiny() {
  static const auto instances = criterion1_instances();
  return instances;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome oracle_optimality() {
  int bad = 0;
  double worst = 0;
  for (const auto& inst : tiny()) {
    const auto brute = oracle::brute_force_offline(inst);
    const auto dp = solve_offline(inst);
    ledger.schedule(*dp.schedule, inst, "exact");
    ledger.schedule(brute.schedule, inst, "enumeration");
    const double rel = std::abs(dp.cost - brute.cost) / std::max(1.0, brute.cost);
    worst = std::max(worst, rel);
    if (rel > 1e-9) ++bad;
  }
  return {bad == 0, "200 instances, mismatches " + std::to_string(bad) + ", worst rel diff " + num(worst)};
}

Outcome allocation_oracle() {
  Rng rng(20240602);
  int bad = 0;
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const auto s = rightsize::testing::aligned_allocation_sample(rng);
    const double got = eval_g_total(s.servers, s.volume, s.costs).cost;
    const double want = oracle::grid_search_allocation(s.servers, s.volume, s.costs, 200);
    if (got == kInfiniteCost || want == kInfiniteCost) {
      if (got != want) ++bad;
      continue;
    }
    const double excess = std::abs(got - want) / (1.0 + want);
    worst = std::max(worst, excess);
    if (excess > 1e-3) ++bad;
  }
  return {bad == 0, "500 samples, N=200, failures " + std::to_string(bad) + ", worst |diff|/(1+oracle) " + num(worst)};
}

Outcome idle_budget_golden() {
  const std::vector<double> idle{3, 1, 4, 1, 2, 1, 1, 2, 3, 5, 1, 3};
  const double beta = 6;
  bool ok = idle_dwell(idle, beta, 1, 12) == 3 && idle_dwell(idle, beta, 2, 12) == 2 && idle_dwell(idle, beta, 3, 12) == 4;
  const std::map<int, std::vector<int>> want{{5, {1, 2}}, {8, {3}}, {9, {4, 5}}, {10, {6, 7, 8}}, {12, {9}}};
  for (const auto& [t, w] : want) ok = ok && expiry_slots(idle, beta, t) == w;
  return {ok, "dwell (3,2,4), W_5={1,2} W_8={3} W_9={4,5} W_10={6,7,8} W_12={9}"};
}

Outcome fixed_dwell_golden() {
  const std::vector<int> hat{1, 1, 1, 2, 2, 0, 0, 3, 3, 2, 2, 1, 0, 0};
  const std::vector<int> want{1, 1, 1, 2, 2, 1, 1, 3, 3, 3, 3, 3, 1, 0};
  FixedDwellPolicy policy({5});
  std::vector<int> got;
  for (int x : hat) got.push_back(policy.step(std::vector<int>{x})[0]);
  std::string text;
  for (int x : got) text += std::to_string(x);
  return {got == want, "x = " + text};
}

Outcome gamma_grid_golden() {
  const auto g = build_gamma_grid(10, 2.0);
  std::string text;
  for (int v : g) text += (text.empty() ? "" : ",") + std::to_string(v);
  return {g == std::vector<int>{0, 1, 2, 4, 8, 10}, "{" + text + "}"};
}

Outcome approximation_bound() {
  int bad = 0;
  int runs = 0;
  auto check = [&](const ProblemInstance& inst) {
    const double exact = solve_offline(inst).cost;
    for (double eps : {0.25, 0.5, 1.0}) {
      const auto r = solve_approx(inst, eps);
      ++runs;
      ledger.schedule(*r.offline.schedule, inst, "approx");
      if (!(r.offline.cost <= (1 + eps) * exact + 1e-9 && r.offline.cost >= exact - 1e-9)) ++bad;
    }
  };
  for (const auto& inst : tiny()) check(inst);
  // Fleets up to 12, where the geometric grids actually drop states.
  Rng rng(20240606);
  for (int i = 0; i < 200; ++i) {
    TinyOptions opt;
    opt.max_fleet = 12;
    opt.time_dependent = i % 2 == 0;
    check(random_tiny_instance(rng, opt));
  }
  return {bad == 0, std::to_string(runs) + " runs (200 criterion-1 instances + 200 with m <= 12), violations " +
                        std::to_string(bad)};
}

Outcome competitive_audits() {
  Rng rng(20240607);
  std::map<std::string, std::pair<int, double>> stats;  // violations, worst ratio / bound
  auto audit = [&](const ProblemInstance& inst, OnlineAlgorithm alg, const std::string& label) {
    OnlineOptions opt;
    opt.epsilon = 0.5;
    const auto r = run_online(inst, alg, opt, true);
    ledger.online(r, inst);
    auto& [violations, worst] = stats[label];
    if (r.bound_violated) ++violations;
    if (std::isfinite(*r.ratio)) worst = std::max(worst, *r.ratio / r.bound);
  };
  for (int i = 0; i < 200; ++i) {
    TinyOptions opt;
    opt.max_horizon = 8;
    opt.max_fleet = 3;
    audit(random_tiny_instance(rng, opt), OnlineAlgorithm::A, "A");
  }
  for (int i = 0; i < 200; ++i) {
    TinyOptions opt;
    opt.max_horizon = 8;
    opt.max_fleet = 3;
    opt.load_independent = true;
    const auto inst = random_tiny_instance(rng, opt);
    if (competitive_bound(inst, OnlineAlgorithm::A, 0) != 2.0 * inst.types()) return {false, "bound is not 2d"};
    audit(inst, OnlineAlgorithm::A, "A/load-independent");
  }
  for (int i = 0; i < 200; ++i) {
    TinyOptions opt;
    opt.max_horizon = 8;
    opt.max_fleet = 3;
    opt.time_dependent = true;
    const auto inst = random_tiny_instance(rng, opt);
    audit(inst, OnlineAlgorithm::B, "B");
    audit(inst, OnlineAlgorithm::C, "C");
  }
  bool ok = true;
  std::string detail;
  for (const auto& [label, s] : stats) {
    ok = ok && s.first == 0;
    detail += label + ": violations " + std::to_string(s.first) + ", worst ratio/bound " + num(s.second) + "; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome feasibility_suite() {
  return {ledger.schedules > 0 && ledger.infeasible == 0 && ledger.dominance_failures == 0,
          std::to_string(ledger.schedules) + " schedules, " + std::to_string(ledger.infeasible) + " infeasible; " +
              std::to_string(ledger.online_slots) + " online slots, " + std::to_string(ledger.dominance_failures) +
              " below the prefix optimum" + (ledger.first_problem.empty() ? "" : " (" + ledger.first_problem + ")")};
}

Outcome varying_fleet_consistency() {
  Rng rng(20240609);
  int identical = 0;
  for (int i = 0; i < 50; ++i) {
    TinyOptions opt;
    opt.time_dependent = i % 2 == 0;
    const auto inst = random_tiny_instance(rng, opt);
    const auto wide = inst.expanded();
    const auto a = solve_offline(inst);
    const auto b = solve_on_grids(wide, full_grids(wide, false), DpOptions{});
    ledger.schedule(*b.schedule, wide, "per-slot");
    if (a.cost == b.cost && *a.schedule == *b.schedule) ++identical;
  }
  int matched = 0;
  int varied = 0;
  for (int i = 0; i < 50; ++i) {
    TinyOptions opt;
    opt.vary_fleet = true;
    opt.max_horizon = 4;
    opt.time_dependent = i % 2 == 1;
    ProblemInstance inst;
    do {
      inst = random_tiny_instance(rng, opt);
    } while (!inst.fleet_varies());
    ++varied;
    const auto brute = oracle::brute_force_offline(inst);
    const auto dp = solve_offline(inst);
    ledger.schedule(*dp.schedule, inst, "varying fleet");
    if (std::abs(dp.cost - brute.cost) <= 1e-9 * std::max(1.0, brute.cost)) ++matched;
  }
  return {identical == 50 && matched == 50,
          "constant fleet identical " + std::to_string(identical) + "/50, varying fleet matches " +
              std::to_string(matched) + "/" + std::to_string(varied)};
}

Outcome equal_split() {
  Rng rng(20240610);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = rightsize::testing::random_convex(rng);
    const int x = rng.integer(1, 4);
    const double load = rng.uniform(0.0, 10.0);
    std::vector<double> a(static_cast<std::size_t>(x));
    for (auto& v : a) v = rng.uniform();
    const double total = std::accumulate(a.begin(), a.end(), 0.0);
    double uneven = 0;
    for (double v : a) uneven += f(load * v / total);
    if (!(x * f(load / x) <= uneven + 1e-9)) ++bad;
  }
  return {bad == 0, "1000 samples, violations " + std::to_string(bad)};
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rightsize");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / ("rightsize_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto p = [&](const std::string& name) { return (dir / name).string(); };
  bool ok = true;
  int files = 0;
  for (const char* profile : {"sinusoidal", "bursty", "constant"}) {
    const std::vector<std::string> gen{"gen", "--T", "24", "--d", "2", "--m", "4", "--seed", "42", "--profile", profile};
    auto a = gen;
    a.insert(a.end(), {"--out", p("a.json")});
    auto b = gen;
    b.insert(b.end(), {"--out", p("b.json")});
    ok = ok && run_cli(a) == 0 && run_cli(b) == 0;
    ok = ok && io::read_file(p("a.json")) == io::read_file(p("b.json"));
    ok = ok && run_cli({"compare", p("a.json"), "--out", p("r1.csv")}) == 0;
    ok = ok && run_cli({"compare", p("b.json"), "--out", p("r2.csv")}) == 0;
    ok = ok && io::read_file(p("r1.csv")) == io::read_file(p("r2.csv"));
    ok = ok && io::read_file(p("r1.slots.csv")) == io::read_file(p("r2.slots.csv"));
    ok = ok && run_cli({"online", p("a.json"), "--alg", "c", "--out", p("c1.csv")}) == 0;
    ok = ok && run_cli({"online", p("a.json"), "--alg", "c", "--out", p("c2.csv")}) == 0;
    ok = ok && io::read_file(p("c1.csv")) == io::read_file(p("c2.csv"));
    files += 4;
  }
  fs::remove_all(dir);
  return {ok, std::to_string(files) + " file pairs byte-identical (instances, run reports, per-slot reports, schedules)"};
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "offline optimum equals enumeration", 60, oracle_optimality},
      {2, "allocation equals simplex grid search", 30, allocation_oracle},
      {3, "idle-budget expiry sets golden", 1, idle_budget_golden},
      {4, "fixed-dwell trace golden", 1, fixed_dwell_golden},
      {5, "geometric grid golden", 1, gamma_grid_golden},
      {6, "approximation within 1+epsilon", 120, approximation_bound},
      {7, "competitive bound audits", 300, competitive_audits},
      {9, "time-varying fleet consistency", 60, varying_fleet_consistency},
      {8, "every schedule feasible, online dominance", 1, feasibility_suite},
      {10, "equal split dominance", 10, equal_split},
      {11, "seeded reports are byte-identical", 60, determinism},
  };
  std::map<int, std::string> lines;
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; took " + num(secs) + " s, limit " + num(c.limit_seconds) + " s";
    }
    all = all && o.pass;
    lines[c.id] = std::string(o.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(c.id) + ": " + c.name + " - " +
                  o.detail + " [" + num(secs) + " s]";
  }
  for (const auto& [id, line] : lines) std::printf("%s\n", line.c_str());
  return all ? 0 : 1;
}
