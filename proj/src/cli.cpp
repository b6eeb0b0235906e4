#include "rightsize/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

#include "format.hpp"
#include "rightsize/allocation.hpp"
#include "rightsize/approx.hpp"
#include "rightsize/generate.hpp"
#include "rightsize/io.hpp"
#include "rightsize/online.hpp"
#include "rightsize/oracle.hpp"
#include "rightsize/report.hpp"

namespace rightsize {

namespace {

using detail::compact;
using detail::fixed9;

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

struct VerifyStats {
  int instances = 0;
  int allocation_checks = 0;
  std::vector<std::string> mismatches;
};

// Oracle cross-checks for one instance; appends to `stats`.
void verify_one(const ProblemInstance& instance, int resolution, const std::string& label, VerifyStats& stats) {
  ++stats.instances;
  const auto brute = oracle::brute_force_offline(instance);
  const auto dp = solve_offline(instance);
  if (!costs_close(brute.cost, dp.cost)) {
    stats.mismatches.push_back(label + ": DP cost " + fixed9(dp.cost) + " vs enumeration " + fixed9(brute.cost));
  }
  if (!costs_close(dp.breakdown->grand_total, dp.cost)) {
    stats.mismatches.push_back(label + ": schedule cost " + fixed9(dp.breakdown->grand_total) + " vs DP value " +
                               fixed9(dp.cost));
  }
  if (instance.types() > 3) return;
  for (int t = 0; t < instance.horizon(); ++t) {
    const ConfigGrid grid = ConfigGrid::full(instance.fleet_at(t));
    std::vector<int> x(grid.types());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      grid.decode(i, x);
      double cap = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) cap += x[j] * instance.cost(t, static_cast<int>(j)).z_max();
      // Below this slack no point of the discretised simplex may fit.
      if (cap < instance.volume(t) * (1.0 + static_cast<double>(x.size()) / resolution)) continue;
      ++stats.allocation_checks;
      const double got = eval_g_total(x, instance.volume(t), instance.costs_at(t)).cost;
      const double want = oracle::grid_search_allocation(x, instance.volume(t), instance.costs_at(t), resolution);
      if (!(got <= want + 1e-9 * (1.0 + want)) || want - got > 1e-3 * (1.0 + want)) {
        stats.mismatches.push_back(label + " slot " + std::to_string(t + 1) + ": allocation " + fixed9(got) +
                                   " vs grid search " + fixed9(want));
      }
    }
  }
}

std::string online_summary(const OnlineRunResult& r) {
  std::ostringstream out;
  out << "# algorithm=" << to_string(r.algorithm) << '\n';
  out << "# bound=" << fixed9(r.bound) << '\n';
  if (r.optimum) {
    out << "# opt_cost=" << fixed9(*r.optimum) << '\n';
    out << "# ratio=" << fixed9(*r.ratio) << '\n';
    out << "# bound_violated=" << (r.bound_violated ? 1 : 0) << '\n';
  }
  if (r.inner_cost) out << "# inner_cost=" << fixed9(*r.inner_cost) << '\n';
  return out.str();
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-sizing schedules for heterogeneous data centers", "rightsize"};
  app.require_subcommand(1);
  app.fallthrough();
  bool serial = false;
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  std::string file;
  std::string out_path;

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("file", file, "Instance JSON")->required();

  bool cost_only = false;
  auto* solve = app.add_subcommand("solve", "Optimal offline schedule");
  solve->add_option("file", file, "Instance JSON")->required();
  solve->add_flag("--cost-only", cost_only, "Print only the optimal cost");
  solve->add_option("--out", out_path, "Schedule CSV (default stdout)");

  double epsilon = 0.5;
  double gamma = 0.0;
  auto* approx = app.add_subcommand("approx", "Approximate offline schedule on geometric grids");
  approx->add_option("file", file, "Instance JSON")->required();
  auto* eps_opt = approx->add_option("--epsilon", epsilon, "Target factor 1 + epsilon")->check(CLI::PositiveNumber);
  auto* gamma_opt = approx->add_option("--gamma", gamma, "Grid ratio (> 1)");
  eps_opt->excludes(gamma_opt);
  approx->add_option("--out", out_path, "Schedule CSV (default stdout)");

  std::string alg_name;
  bool audit = false;
  double prefix_gamma = 0.0;
  auto* online = app.add_subcommand("online", "Run an online algorithm");
  online->add_option("file", file, "Instance JSON")->required();
  online->add_option("--alg", alg_name, "a, b or c")->required()->check(CLI::IsMember({"a", "b", "c"}, CLI::ignore_case));
  online->add_option("--epsilon", epsilon, "Algorithm C parameter")->check(CLI::PositiveNumber);
  online->add_flag("--audit", audit, "Also solve offline and report the ratio");
  online->add_option("--prefix-gamma", prefix_gamma, "Heuristic geometric grid for the prefix optimum");
  online->add_option("--out", out_path, "Schedule CSV (default stdout)");

  int random_count = 0;
  std::uint64_t seed = 1;
  int resolution = 4000;
  auto* verify = app.add_subcommand("verify", "Cross-check solvers against brute force");
  auto* verify_file = verify->add_option("file", file, "Instance JSON");
  auto* random_opt = verify->add_option("--random", random_count, "Number of seeded tiny instances")
                         ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for --random");
  verify->add_option("--resolution", resolution, "Grid search steps per unit")->check(CLI::PositiveNumber);
  verify_file->excludes(random_opt);

  GenOptions gen_options;
  std::string profile_name = "sinusoidal";
  bool seed_given = false;
  auto* gen = app.add_subcommand("gen", "Write a synthetic instance");
  gen->add_option("--T", gen_options.horizon, "Slots")->check(CLI::PositiveNumber);
  gen->add_option("--d", gen_options.types, "Server types")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_options.fleet, "Servers per type")->check(CLI::PositiveNumber);
  auto* seed_opt = gen->add_option("--seed", gen_options.seed, "Random seed");
  gen->add_option("--profile", profile_name, "sinusoidal, bursty or constant")
      ->check(CLI::IsMember({"sinusoidal", "bursty", "constant"}));
  gen->add_flag("--time-dependent", gen_options.time_dependent, "Per-slot cost functions");
  gen->add_option("--out", out_path, "Instance JSON (default stdout)");

  std::string slots_path;
  bool timing = false;
  CompareOptions compare_options;
  auto* compare = app.add_subcommand("compare", "Run every applicable solver and write a report");
  compare->add_option("file", file, "Instance JSON")->required();
  compare->add_option("--out", out_path, "Run report CSV")->required();
  compare->add_option("--slots", slots_path, "Per-slot CSV (default: <out stem>.slots.csv)");
  compare->add_option("--epsilons", compare_options.epsilons, "Approximation parameters")->delimiter(',');
  compare->add_option("--online-epsilon", compare_options.online_epsilon, "Algorithm C parameter")
      ->check(CLI::PositiveNumber);
  compare->add_flag("--timing", timing, "Add a wall_seconds column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto exec = serial ? kernels::Execution::serial : kernels::Execution::parallel;
  DpOptions dp;
  dp.execution = exec;

  try {
    if (*validate) {
      const auto report = validate_instance(io::read_instance(file));
      out << report.to_string();
      return report.ok() ? 0 : 1;
    }
    if (*solve) {
      const auto instance = io::read_instance(file);
      if (cost_only) {
        dp.track_paths = false;
        out << fixed9(solve_offline(instance, dp).cost) << '\n';
        return 0;
      }
      const auto result = solve_offline(instance, dp);
      emit(out, out_path, io::schedule_to_csv(*result.schedule, *result.breakdown));
      return 0;
    }
    if (*approx) {
      const auto instance = io::read_instance(file);
      if (!*eps_opt && !*gamma_opt) {
        err << "approx: one of --epsilon or --gamma is required\n";
        return 2;
      }
      const auto result = *gamma_opt ? solve_gamma(instance, gamma, dp) : solve_approx(instance, epsilon, dp);
      emit(out, out_path,
           io::schedule_to_csv(*result.offline.schedule, *result.offline.breakdown) + "# gamma=" + compact(result.gamma) +
               "\n");
      return 0;
    }
    if (*online) {
      const auto instance = io::read_instance(file);
      OnlineOptions options;
      options.epsilon = epsilon;
      options.execution = exec;
      if (prefix_gamma > 0.0) options.prefix_gamma = prefix_gamma;
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(alg_name[0])));
      const auto alg = c == 'a' ? OnlineAlgorithm::A : c == 'b' ? OnlineAlgorithm::B : OnlineAlgorithm::C;
      const auto result = run_online(instance, alg, options, audit);
      emit(out, out_path, io::schedule_to_csv(result.schedule, result.cost) + online_summary(result));
      if (result.bound_violated) {
        err << "competitive bound violated: ratio " << fixed9(*result.ratio) << " > " << fixed9(result.bound) << '\n';
        return 1;
      }
      return 0;
    }
    if (*verify) {
      VerifyStats stats;
      if (*random_opt) {
        Rng rng(seed);
        for (int i = 0; i < random_count; ++i) {
          TinyOptions tiny;
          tiny.time_dependent = i % 2 == 1;
          tiny.vary_fleet = i % 3 == 2;
          verify_one(random_tiny_instance(rng, tiny), resolution, "instance " + std::to_string(i + 1), stats);
        }
      } else if (*verify_file) {
        verify_one(io::read_instance(file), resolution, file, stats);
      } else {
        err << "verify: give an instance file or --random N\n";
        return 2;
      }
      for (const auto& m : stats.mismatches) out << "MISMATCH " << m << '\n';
      out << "instances=" << stats.instances << " allocation_checks=" << stats.allocation_checks
          << " mismatches=" << stats.mismatches.size() << '\n';
      return stats.mismatches.empty() ? 0 : 1;
    }
    if (*gen) {
      gen_options.profile = parse_profile(profile_name);
      seed_given = seed_opt->count() > 0;
      if (!seed_given) err << "seed: " << gen_options.seed << '\n';
      emit(out, out_path, io::instance_to_json(generate_instance(gen_options)));
      return 0;
    }
    if (*compare) {
      const auto instance = io::read_instance(file);
      compare_options.dp = dp;
      const auto runs = compare_all(instance, compare_options);
      if (slots_path.empty()) {
        std::filesystem::path p(out_path);
        slots_path = (p.parent_path() / (p.stem().string() + ".slots.csv")).string();
      }
      io::write_file(out_path, runs_csv(runs, timing));
      io::write_file(slots_path, slots_csv(runs, instance));
      bool violated = false;
      for (const auto& r : runs) violated = violated || r.bound_violated;
      out << "runs=" << runs.size() << " opt_cost=" << fixed9(runs.front().optimum) << '\n';
      return violated ? 1 : 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace rightsize
