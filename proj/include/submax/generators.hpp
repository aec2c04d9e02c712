#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "submax/checks.hpp"
#include "submax/errors.hpp"
#include "submax/instance.hpp"
#include "submax/rng.hpp"

namespace submax {

// ---------------------------------------------------------------------------
// Reproducible instance generators. Everything is a deterministic function
// of (parameters, seed); weights and costs are integers so serialized files
// are platform-independent byte for byte.
// ---------------------------------------------------------------------------

/// Random coverage instance: n elements over a `universe`-point universe,
/// each element covering every point independently with probability
/// `density` (at least one point). Monotone submodular.
inline CoverageSpec generate_coverage(int n, int universe, double density,
                                      Rng& rng) {
  CoverageSpec spec;
  spec.universe = universe;
  for (int e = 0; e < n; ++e) {
    std::vector<int> covered;
    for (int p = 0; p < universe; ++p)
      if (rng.bernoulli(density)) covered.push_back(p);
    if (covered.empty())
      covered.push_back(static_cast<int>(rng.uniform_int(
          static_cast<std::uint64_t>(universe))));
    spec.sets.push_back(std::move(covered));
  }
  return spec;
}

/// Random coverage-minus-cost instance. Costs are drawn as a fraction of
/// each element's own coverage and then rescaled downward until the value
/// stays non-negative on every subset (verified exhaustively for n <= 14),
/// which keeps f non-negative without clamping. Typically non-monotone.
inline CoverageMinusCostSpec generate_coverage_minus_cost(int n, int universe,
                                                          double density,
                                                          Rng& rng,
                                                          int max_attempts = 64) {
  if (n > kExhaustiveCap)
    throw CapExceeded("generate_coverage_minus_cost: n above exhaustive cap");
  CoverageSpec coverage = generate_coverage(n, universe, density, rng);
  CoverageMinusCostSpec spec;
  spec.universe = coverage.universe;
  spec.sets = coverage.sets;
  // integer costs, at most the element's own coverage size
  for (int e = 0; e < n; ++e) {
    const auto own = static_cast<std::uint64_t>(spec.sets[static_cast<std::size_t>(e)].size());
    spec.costs.push_back(static_cast<double>(rng.uniform_int(own + 1)));
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Instance probe{n, spec, std::nullopt};
    const auto oracle = probe.make_oracle();
    if (check_nonneg_and_zero(*oracle).holds) return spec;
    // halve every cost (rounding down) and retry
    bool any = false;
    for (auto& c : spec.costs) {
      c = std::floor(c / 2.0);
      if (c > 0.0) any = true;
    }
    if (!any) return spec;  // all-zero costs: plain coverage, non-negative
  }
  throw GenerationFailed("generate_coverage_minus_cost: rejection budget exhausted");
}

/// Random weighted graph cut instance: each pair is an edge independently
/// with probability `edge_prob`, weights uniform integers in [1, 4].
inline CutSpec generate_cut(int n, double edge_prob, Rng& rng) {
  CutSpec spec;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(edge_prob))
        spec.edges.push_back({u, v, static_cast<double>(1 + rng.uniform_int(4))});
  if (spec.edges.empty() && n >= 2) spec.edges.push_back({0, 1, 1.0});
  return spec;
}

/// Random modular instance with integer weights in [0, 9].
inline ModularSpec generate_modular(int n, Rng& rng) {
  ModularSpec spec;
  for (int e = 0; e < n; ++e)
    spec.weights.push_back(static_cast<double>(rng.uniform_int(10)));
  return spec;
}

/// Random partition of 0..n-1 into k non-empty groups.
inline PartitionSpec generate_partition(int n, int k, Rng& rng) {
  if (k < 1 || k > n)
    throw InvalidParameter("generate_partition: need 1 <= k <= n");
  const auto perm = rng.permutation(n);
  PartitionSpec spec;
  spec.groups.assign(static_cast<std::size_t>(k), {});
  for (int i = 0; i < n; ++i) {
    const int g = (i < k) ? i
                          : static_cast<int>(rng.uniform_int(
                                static_cast<std::uint64_t>(k)));
    spec.groups[static_cast<std::size_t>(g)].push_back(perm[static_cast<std::size_t>(i)]);
  }
  for (auto& g : spec.groups) std::sort(g.begin(), g.end());
  return spec;
}

/// Random connected-ish multigraph whose edges form the ground set.
inline GraphicSpec generate_graphic(int n_edges, int vertices, Rng& rng) {
  GraphicSpec spec;
  spec.vertices = vertices;
  for (int e = 0; e < n_edges; ++e) {
    int u = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(vertices)));
    int v = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(vertices)));
    spec.edges.push_back({u, v});
  }
  return spec;
}

/// Knapsack with integer sizes in [1, max_size] and budget about
/// `budget_fraction` of the total size.
inline KnapsackSpec generate_knapsack(int n, int max_size,
                                      double budget_fraction, Rng& rng) {
  KnapsackSpec spec;
  std::int64_t total = 0;
  for (int e = 0; e < n; ++e) {
    const auto c = static_cast<std::int64_t>(1 + rng.uniform_int(
        static_cast<std::uint64_t>(max_size)));
    spec.sizes.push_back(c);
    total += c;
  }
  spec.budget = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(budget_fraction * static_cast<double>(total)));
  return spec;
}

/// One generated instance plus the seed that produced it.
struct GeneratedInstance {
  Instance instance;
  std::uint64_t seed = 0;
};

/// Reproducible corpus of `count` instances of the named family. Every
/// generated function is submodular by construction; non-negativity is
/// (re)verified here by rejection, and the sampled-mode submodularity check
/// runs as a guard on each emitted instance.
inline std::vector<GeneratedInstance> generate_corpus(
    const std::string& family, int count, int n, std::uint64_t seed,
    int max_attempts = 64) {
  std::vector<GeneratedInstance> corpus;
  const Rng root(seed);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t child_seed = Rng(seed).child(static_cast<std::uint64_t>(i)).next_u64();
    Rng rng = root.child(static_cast<std::uint64_t>(i));
    Instance instance;
    instance.n = n;
    if (family == "coverage") {
      instance.function = generate_coverage(n, std::max(4, 3 * n / 2), 0.25, rng);
    } else if (family == "coverage_minus_cost") {
      instance.function = generate_coverage_minus_cost(
          n, std::max(4, 3 * n / 2), 0.3, rng, max_attempts);
    } else if (family == "cut") {
      instance.function = generate_cut(n, 0.5, rng);
    } else if (family == "modular") {
      instance.function = generate_modular(n, rng);
    } else {
      throw InvalidConfig("generate_corpus: unknown family '" + family + "'");
    }
    const auto oracle = instance.make_oracle();
    if (n <= 12) {
      if (!check_nonneg_and_zero(*oracle).holds)
        throw GenerationFailed("generate_corpus: negative value slipped through");
      if (!check_submodular(*oracle, CheckMode::exhaustive).holds)
        throw GenerationFailed("generate_corpus: non-submodular instance");
    } else {
      if (!check_submodular(*oracle, CheckMode::sampled, 2000, child_seed).holds ||
          !check_nonneg_and_zero(*oracle, CheckMode::sampled, 2000, child_seed).holds)
        throw GenerationFailed("generate_corpus: sampled property check failed");
    }
    corpus.push_back({std::move(instance), child_seed});
  }
  return corpus;
}

}  // namespace submax
