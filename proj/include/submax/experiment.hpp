#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <string>

#include "submax/brute_force.hpp"
#include "submax/errors.hpp"
#include "submax/instance.hpp"
#include "submax/monte_carlo.hpp"
#include "submax/offline.hpp"
#include "submax/rank.hpp"
#include "submax/report.hpp"
#include "submax/secretary.hpp"
#include "submax/secretary_matroid.hpp"
#include "submax/secretary_partition.hpp"
#include "submax/unconstrained.hpp"

namespace submax {

/// Fully determines a run byte-for-byte given the RNG spec.
struct ExperimentConfig {
  Instance instance;
  std::string algorithm;      // solve: card | psys | knapsack
                              // simulate: card-secretary | partition-contig |
                              //           partition-general | matroid-secretary |
                              //           dynkin
  int k = 2;                  // cardinality / matroid rank parameter
  int p = 1;                  // p-system parameter (pass count = p + 1)
  int trials = 1000;          // simulate only
  FmvBackend backend = FmvBackend::random();
  std::uint64_t seed = 0;
  int cap = kBruteForceCap;   // brute-force enumeration cap
  int fast_m = 0;             // knapsack wrapper: second-pass only top m
  bool stop_nonpositive = false;  // greedy variant; excluded from bounds
};

namespace detail {

inline std::optional<BruteForceResult> try_brute_force(
    const ExperimentConfig& cfg, const ValueOracle& f,
    const IndependenceOracle* sys) {
  const int n = f.ground_size();
  if (cfg.algorithm == "dynkin") {
    // the single-selection rule competes against the best singleton
    if (n <= cfg.cap) return brute_force_opt_cardinality(f, 1, cfg.cap);
    return std::nullopt;
  }
  if (cfg.algorithm == "card" || cfg.algorithm == "card-secretary") {
    if (n <= cfg.cap) return brute_force_opt_cardinality(f, cfg.k, cfg.cap);
    return std::nullopt;
  }
  if (cfg.algorithm == "knapsack") {
    if (sys != nullptr && n <= cfg.cap)
      return brute_force_opt_constrained(f, *sys, cfg.cap);
    return std::nullopt;
  }
  if (cfg.algorithm == "partition-contig" ||
      cfg.algorithm == "partition-general") {
    const auto* part = cfg.instance.constraint
                           ? std::get_if<PartitionSpec>(&cfg.instance.constraint->value)
                           : nullptr;
    if (part != nullptr) {
      try {
        return brute_force_opt_partition(f, PartitionMatroid(part->groups));
      } catch (const CapExceeded&) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }
  if (sys == nullptr) return std::nullopt;
  if (n <= std::min(cfg.cap, 14))
    return brute_force_opt_constrained(f, *sys, std::min(cfg.cap, 14));
  return std::nullopt;
}

inline json candidates_json(const MultiPassResult& result) {
  json arr = json::array();
  for (const auto& c : result.candidates) {
    json jc;
    jc["label"] = c.label;
    jc["set"] = c.set;
    jc["value"] = c.value;
    arr.push_back(std::move(jc));
  }
  return arr;
}

}  // namespace detail

/// Offline run: dispatches to the multi-pass algorithm named by the config,
/// reports every candidate, the chosen set, oracle query count, and (when
/// the instance is small enough to brute force) OPT, the achieved ratio and
/// the instantiated approximation bound.
inline RunReport run_solve(const ExperimentConfig& cfg) {
  const auto oracle = cfg.instance.make_oracle();
  const ValueOracle& f = *oracle;
  Rng rng(cfg.seed);
  const double alpha = cfg.backend.alpha();

  MultiPassResult result;
  std::string bound_formula;
  double bound_divisor = 1.0;
  std::unique_ptr<IndependenceOracle> sys;
  if (cfg.algorithm == "card") {
    result = submod_max_cardinality(f, full_set(f.ground_size()), cfg.k,
                                    cfg.backend, rng, cfg.stop_nonpositive);
    bound_formula = "OPT/(4+alpha)";
    bound_divisor = 4.0 + alpha;
  } else if (cfg.algorithm == "psys") {
    if (!cfg.instance.constraint)
      throw InvalidConfig("psys: instance has no constraint");
    sys = cfg.instance.make_constraint();
    result = submod_max_psystem(f, full_set(f.ground_size()), *sys, cfg.p,
                                cfg.backend, rng);
    bound_formula = "OPT/((1+alpha)(p+2+1/p))";
    bound_divisor =
        (1.0 + alpha) * (cfg.p + 2.0 + 1.0 / static_cast<double>(cfg.p));
  } else if (cfg.algorithm == "knapsack") {
    const auto* knap = cfg.instance.constraint
                           ? std::get_if<KnapsackSpec>(&cfg.instance.constraint->value)
                           : nullptr;
    if (knap == nullptr)
      throw InvalidConfig("knapsack: instance has no knapsack constraint");
    sys = cfg.instance.make_constraint();
    result = submod_max_knapsack(f, knap->sizes, knap->budget, cfg.backend,
                                 rng, cfg.fast_m);
    bound_formula = "OPT/(4+alpha)";
    bound_divisor = 4.0 + alpha;
  } else {
    throw InvalidConfig("run_solve: unknown algorithm '" + cfg.algorithm + "'");
  }

  RunReport report;
  report.body["mode"] = "solve";
  report.body["algorithm"] = cfg.algorithm;
  report.body["fmv"] = cfg.backend.name();
  report.body["alpha"] = alpha;
  report.body["k"] = cfg.k;
  report.body["p"] = cfg.p;
  report.body["seed"] = cfg.seed;
  report.body["chosen"] = result.chosen();
  report.body["value"] = result.value();
  report.body["candidates"] = detail::candidates_json(result);
  report.body["query_count"] = f.query_count();

  const auto opt = detail::try_brute_force(cfg, f, sys.get());
  if (opt) {
    report.body["opt"] = opt->opt_value;
    report.body["opt_set"] = opt->opt_set;
    const double bound = opt->opt_value / bound_divisor;
    report.body["bound"] = {{"formula", bound_formula}, {"value", bound}};
    report.body["ratio"] =
        opt->opt_value > 0.0 ? result.value() / opt->opt_value : 1.0;
    if (bound > 0.0) report.body["ratio_vs_bound"] = result.value() / bound;
    // the guarantee only covers the literal greedy rule
    if (cfg.stop_nonpositive)
      report.body["bound"] = {{"formula", bound_formula + " (not certified for --stop-nonpositive)"},
                              {"value", bound}};
    report.body["pass"] =
        cfg.stop_nonpositive || result.value() >= bound - 1e-9;
  }
  return report;
}

/// Simulation run: `trials` independent random-order trials of the named
/// secretary policy, with derived per-trial seeds. Reports mean, standard
/// error, per-trial values, OPT when computable, and the instantiated bound
/// (where the source analysis pins one).
inline RunReport run_simulate(const ExperimentConfig& cfg) {
  const auto oracle = cfg.instance.make_oracle();
  const ValueOracle& f = *oracle;
  const int n = f.ground_size();

  std::unique_ptr<IndependenceOracle> sys;
  std::unique_ptr<PartitionMatroid> part;
  if (cfg.algorithm == "partition-contig" || cfg.algorithm == "partition-general") {
    const auto* spec = cfg.instance.constraint
                           ? std::get_if<PartitionSpec>(&cfg.instance.constraint->value)
                           : nullptr;
    if (spec == nullptr)
      throw InvalidConfig(cfg.algorithm + ": instance needs a partition constraint");
    part = std::make_unique<PartitionMatroid>(spec->groups);
  } else if (cfg.algorithm == "matroid-secretary") {
    if (!cfg.instance.constraint)
      throw InvalidConfig("matroid-secretary: instance needs a matroid constraint");
    sys = cfg.instance.make_constraint();
  }

  std::function<double(Rng&)> trial;
  std::string bound_formula;
  double bound_divisor = 0.0;  // 0 = no asserted bound
  if (cfg.algorithm == "card-secretary") {
    trial = [&](Rng& rng) {
      const Stream stream = Stream::uniform(n, rng);
      return f.evaluate(submodular_secretaries(f, stream, cfg.k, cfg.backend, rng));
    };
    bound_formula = "OPT/1417";
    bound_divisor = 1417.0;
  } else if (cfg.algorithm == "partition-contig") {
    trial = [&](Rng& rng) {
      const Stream stream = contiguous_stream(*part, rng);
      return f.evaluate(partition_contiguous_secretary(f, *part, stream, rng));
    };
    bound_formula = "OPT/(3+6e)";
    bound_divisor = 3.0 + 6.0 * std::exp(1.0);
  } else if (cfg.algorithm == "partition-general") {
    trial = [&](Rng& rng) {
      const Stream stream = Stream::uniform(n, rng);
      return f.evaluate(partition_general_secretary(f, *part, stream, rng));
    };
  } else if (cfg.algorithm == "matroid-secretary") {
    trial = [&](Rng& rng) {
      const Stream stream = Stream::uniform(n, rng);
      return f.evaluate(matroid_secretary(f, *sys, stream, cfg.k, rng));
    };
  } else if (cfg.algorithm == "dynkin") {
    trial = [&](Rng& rng) {
      const Stream stream = Stream::uniform(n, rng);
      DynkinPolicy policy(f, n);
      return f.evaluate(run_policy(policy, stream));
    };
  } else {
    throw InvalidConfig("run_simulate: unknown algorithm '" + cfg.algorithm + "'");
  }

  const MonteCarloResult mc = monte_carlo_eval(trial, cfg.trials, cfg.seed);

  RunReport report;
  report.body["mode"] = "simulate";
  report.body["algorithm"] = cfg.algorithm;
  report.body["fmv"] = cfg.backend.name();
  report.body["k"] = cfg.k;
  report.body["trials"] = cfg.trials;
  report.body["seed"] = cfg.seed;
  report.body["mean"] = mc.mean;
  report.body["stderr"] = mc.stderr_of_mean;
  report.body["query_count"] = f.query_count();

  const auto opt = detail::try_brute_force(cfg, f, sys.get());
  if (opt) {
    report.body["opt"] = opt->opt_value;
    report.body["ratio"] = opt->opt_value > 0.0 ? mc.mean / opt->opt_value : 1.0;
    if (bound_divisor > 0.0) {
      const double bound = opt->opt_value / bound_divisor;
      report.body["bound"] = {{"formula", bound_formula}, {"value", bound}};
      if (bound > 0.0) report.body["ratio_vs_bound"] = mc.mean / bound;
      report.body["pass"] = mc.mean >= bound - 3.0 * mc.stderr_of_mean;
    }
    if (cfg.algorithm == "matroid-secretary") {
      const double advice_bound =
          opt->opt_value /
          (40.0 * (1.0 + static_cast<double>(ceil_log2(2 * cfg.k))));
      report.body["advice_bound"] = {
          {"formula", "OPT/(40(1+log2 2k))"}, {"value", advice_bound}};
    }
  }
  report.body["trial_values"] = mc.values;
  return report;
}

inline RunReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.algorithm == "card" || cfg.algorithm == "psys" ||
      cfg.algorithm == "knapsack")
    return run_solve(cfg);
  return run_simulate(cfg);
}

inline void emit_report(const RunReport& report, const std::string& path,
                        const std::string& format) {
  report.write(path, format);
}

}  // namespace submax
