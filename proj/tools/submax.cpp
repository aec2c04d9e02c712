// submax: offline and secretary submodular maximization runner.
//
// Subcommands:
//   solve      offline multi-pass algorithms (card | psys | knapsack)
//   simulate   random-order secretary policies, Monte Carlo
//   verify     property suites for an instance (+constraint); exit code 0
//              iff every asserted property and bound passes
//   lowerbound exact best-online-policy value of the cover({1,2},{r}) game
//   gen        reproducible instance corpus + manifest
//   bench      offline algorithm timings at smoke scale (no brute force)

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "submax/submax.hpp"

namespace {

submax::Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw submax::InvalidConfig("cannot open instance file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return submax::parse_instance_text(buffer.str());
}

void print_or_write(const submax::RunReport& report, const std::string& out,
                    const std::string& format) {
  if (out.empty()) {
    std::cout << (format == "csv" ? report.to_csv_text() : report.to_json_text());
  } else {
    report.write(out, format);
    std::cout << "report written to " << out << "\n";
  }
}

int run_verify(const submax::Instance& instance, int cap) {
  using namespace submax;
  const auto oracle = instance.make_oracle();
  bool all_pass = true;
  auto line = [&](const std::string& name, bool ok, const std::string& extra = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!extra.empty()) std::cout << " (" << extra << ")";
    std::cout << "\n";
    if (!ok) all_pass = false;
  };

  const bool small = oracle->ground_size() <= cap;
  const CheckMode mode = small ? CheckMode::exhaustive : CheckMode::sampled;
  line("f(empty)=0 and f>=0", check_nonneg_and_zero(*oracle, mode).holds,
       small ? "exhaustive" : "sampled");
  line("submodularity", check_submodular(*oracle, mode).holds,
       small ? "exhaustive" : "sampled");
  const auto mono = check_monotone(*oracle, mode);
  std::cout << "[info] monotone: " << (mono.holds ? "yes" : "no") << "\n";

  if (instance.constraint) {
    const auto sys = instance.make_constraint();
    if (sys->ground_size() <= cap) {
      const auto table = independence_table(*sys, cap);
      bool down = table[0] != 0;
      for (std::uint64_t m = 0; m < table.size() && down; ++m) {
        if (!table[m]) continue;
        std::uint64_t rest = m;
        while (rest) {
          const std::uint64_t low = rest & (~rest + 1);
          if (!table[m & ~low]) {
            down = false;
            break;
          }
          rest &= rest - 1;
        }
      }
      line("constraint downward closure", down, "exhaustive");
      const bool knapsack =
          std::holds_alternative<KnapsackSpec>(instance.constraint->value);
      const bool intersection =
          std::holds_alternative<IntersectionSpec>(instance.constraint->value);
      if (!knapsack) {
        const auto axiom = matroid_axiom_check(*sys, cap);
        if (intersection) {
          std::cout << "[info] matroid axioms: "
                    << (axiom.holds ? "hold" : ("fail (" + axiom.failed_axiom + ")"))
                    << "\n";
        } else {
          line("matroid axioms", axiom.holds, axiom.failed_axiom);
        }
        const Rational p = p_parameter(*sys, cap);
        std::cout << "[info] p_parameter = " << p.num << "/" << p.den << "\n";
        if (!intersection)
          line("matroid has p_parameter 1", p == Rational{1, 1});
      }
    } else {
      std::cout << "[info] constraint checks skipped: n above cap\n";
    }
  }
  std::cout << (all_pass ? "all checks passed\n" : "CHECK FAILURES\n");
  return all_pass ? 0 : 1;
}

int run_lowerbound() {
  using namespace submax;
  const double value = optimal_online_policy_value(cover_gadget_game(), 2);
  const CoverGadget gadget({1, 2}, {2});
  const auto opt = brute_force_opt_cardinality(gadget, 2);
  std::cout << "optimal online policy value on cover({1,2},{r}), k=2: "
            << value << "\n";
  std::cout << "offline OPT: " << opt.opt_value << "\n";
  std::cout << "online/offline gap: " << value / opt.opt_value
            << " (= 8/9 when exact)\n";
  const bool ok = std::abs(value - 8.0 / 3.0) <= 1e-12;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " induction value equals 8/3\n";
  return ok ? 0 : 1;
}

int run_gen(const std::string& family, int count, int n, std::uint64_t seed,
            const std::string& out_dir) {
  using namespace submax;
  std::filesystem::create_directories(out_dir);
  const auto corpus = generate_corpus(family, count, n, seed);
  json manifest;
  manifest["family"] = family;
  manifest["count"] = count;
  manifest["n"] = n;
  manifest["seed"] = seed;
  manifest["instances"] = json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string name = family + "_" + std::to_string(i) + ".json";
    std::ofstream out(out_dir + "/" + name);
    out << serialize_instance(corpus[i].instance).dump(2) << "\n";
    json entry;
    entry["file"] = name;
    entry["seed"] = corpus[i].seed;
    manifest["instances"].push_back(std::move(entry));
  }
  std::ofstream mout(out_dir + "/manifest.json");
  mout << manifest.dump(2) << "\n";
  std::cout << "wrote " << corpus.size() << " instances to " << out_dir << "\n";
  return 0;
}

int run_bench(std::uint64_t seed) {
  using namespace submax;
  std::cout << "n,algorithm,value,queries,ms\n";
  for (int n : {50, 100, 200}) {
    Rng gen_rng(seed ^ static_cast<std::uint64_t>(n));
    Instance instance;
    instance.n = n;
    instance.function = generate_coverage(n, 2 * n, 0.08, gen_rng);
    const auto oracle = instance.make_oracle();
    {
      Rng rng(seed);
      const auto start = std::chrono::steady_clock::now();
      const auto result = submod_max_cardinality(
          *oracle, full_set(n), 8, FmvBackend::random(), rng);
      const auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      std::cout << n << ",card,"
                << result.value() << "," << oracle->query_count() << "," << ms
                << "\n";
    }
    oracle->reset_query_count();
    {
      Rng rng(seed);
      PartitionMatroid part(generate_partition(n, 8, gen_rng).groups);
      const auto start = std::chrono::steady_clock::now();
      const auto result = submod_max_psystem(*oracle, full_set(n), part, 1,
                                             FmvBackend::random(), rng);
      const auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      std::cout << n << ",psys,"
                << result.value() << "," << oracle->query_count() << "," << ms
                << "\n";
    }
    oracle->reset_query_count();
    if (n <= 50) {
      // the candidate collection is Theta(n^3) seeds; keep it at smoke scale
      Rng rng(seed);
      const auto knap = generate_knapsack(n, 5, 0.3, gen_rng);
      const auto start = std::chrono::steady_clock::now();
      const auto result = submod_max_knapsack(*oracle, knap.sizes, knap.budget,
                                              FmvBackend::random(), rng,
                                              /*fast_m=*/8);
      const auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      std::cout << n << ",knapsack-fast,"
                << result.value() << "," << oracle->query_count() << "," << ms
                << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"submax: non-monotone submodular maximization, offline and secretary"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::uint64_t seed = 0;
  int cap = 14;
  std::string format = "json";
  app.add_option("--seed", seed, "global RNG seed")->capture_default_str();
  app.add_option("--cap", cap,
                 "exhaustive-enumeration cap (oracle-constraint and property\n"
                 "checks; subset brute force defaults to 16)")
      ->capture_default_str();
  app.add_option("--format", format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // solve
  auto* solve = app.add_subcommand("solve", "offline multi-pass algorithms");
  std::string solve_instance, solve_algorithm = "card", solve_fmv = "random";
  std::string solve_report;
  int solve_k = 2, solve_p = 1, solve_fast = 0;
  solve->add_option("--instance", solve_instance, "instance file")->required();
  solve->add_option("--algorithm", solve_algorithm, "card | psys | knapsack")
      ->check(CLI::IsMember({"card", "psys", "knapsack"}));
  solve->add_option("--k", solve_k, "cardinality bound");
  solve->add_option("--p", solve_p, "p-system parameter (pass count p+1)");
  solve->add_option("--fmv", solve_fmv, "random | local | exact")
      ->check(CLI::IsMember({"random", "local", "exact"}));
  solve->add_option("--report", solve_report, "report output path");
  solve->add_flag_function(
      "--fast",
      [&solve_fast](std::int64_t) { solve_fast = 8; },
      "knapsack: second-pass only the top-8 candidates (uncertified)");
  bool solve_stop_nonpositive = false;
  solve->add_flag("--stop-nonpositive", solve_stop_nonpositive,
                  "card: stop greedy at the first non-positive marginal "
                  "(uncertified variant)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "secretary simulations");
  std::string sim_instance, sim_algorithm = "card-secretary", sim_fmv = "exact";
  std::string sim_report;
  int sim_k = 2, sim_trials = 1000;
  simulate->add_option("--instance", sim_instance, "instance file")->required();
  simulate
      ->add_option("--algorithm", sim_algorithm,
                   "card-secretary | partition-contig | partition-general | "
                   "matroid-secretary | dynkin")
      ->check(CLI::IsMember({"card-secretary", "partition-contig",
                             "partition-general", "matroid-secretary",
                             "dynkin"}));
  simulate->add_option("--k", sim_k, "cardinality bound / matroid rank");
  simulate->add_option("--trials", sim_trials, "Monte Carlo trials");
  simulate->add_option("--fmv", sim_fmv, "offline backend inside the conversion")
      ->check(CLI::IsMember({"random", "local", "exact"}));
  simulate->add_option("--report", sim_report, "report output path");

  // verify
  auto* verify = app.add_subcommand("verify", "property suites");
  std::string verify_instance;
  verify->add_option("--instance", verify_instance, "instance file")->required();

  // lowerbound
  app.add_subcommand("lowerbound",
                     "exact best-online-policy value of cover({1,2},{r})");

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance corpus");
  std::string gen_family = "coverage", gen_out = "corpus";
  int gen_count = 10, gen_n = 10;
  gen->add_option("--family", gen_family,
                  "coverage | coverage_minus_cost | cut | modular");
  gen->add_option("--count", gen_count, "number of instances");
  gen->add_option("--n", gen_n, "ground-set size");
  gen->add_option("--out", gen_out, "output directory");

  // bench
  app.add_subcommand("bench", "offline timings at smoke scale");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      submax::ExperimentConfig cfg;
      cfg.instance = load_instance(solve_instance);
      cfg.algorithm = solve_algorithm;
      cfg.k = solve_k;
      cfg.p = solve_p;
      cfg.backend = submax::fmv_backend_from_name(solve_fmv);
      cfg.seed = seed;
      cfg.cap = (cap == 14) ? 16 : cap;  // subset brute force defaults to 16
      cfg.fast_m = solve_fast;
      cfg.stop_nonpositive = solve_stop_nonpositive;
      const auto report = submax::run_solve(cfg);
      print_or_write(report, solve_report, format);
      return report.passed() ? 0 : 1;
    }
    if (simulate->parsed()) {
      submax::ExperimentConfig cfg;
      cfg.instance = load_instance(sim_instance);
      cfg.algorithm = sim_algorithm;
      cfg.k = sim_k;
      cfg.trials = sim_trials;
      cfg.backend = submax::fmv_backend_from_name(sim_fmv);
      cfg.seed = seed;
      cfg.cap = (cap == 14) ? 16 : cap;  // subset brute force defaults to 16
      const auto report = submax::run_simulate(cfg);
      print_or_write(report, sim_report, format);
      return report.passed() ? 0 : 1;
    }
    if (verify->parsed()) return run_verify(load_instance(verify_instance), cap);
    if (app.get_subcommand("lowerbound")->parsed()) return run_lowerbound();
    if (gen->parsed()) return run_gen(gen_family, gen_count, gen_n, seed, gen_out);
    if (app.get_subcommand("bench")->parsed()) return run_bench(seed);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
