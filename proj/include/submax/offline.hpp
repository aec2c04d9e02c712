#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/errors.hpp"
#include "submax/greedy.hpp"
#include "submax/rng.hpp"
#include "submax/subset.hpp"
#include "submax/unconstrained.hpp"
#include "submax/value_oracle.hpp"

namespace submax {

struct Candidate {
  std::string label;
  Subset set;
  double value = 0.0;
};

/// Outcome of a multi-pass run: every candidate considered (greedy passes
/// S_i, their unconstrained refinements S_i', second-pass collections), and
/// the chosen one. The chosen candidate attains the maximum value; ties go
/// to the lexicographically smallest set.
struct MultiPassResult {
  std::vector<Candidate> candidates;
  std::size_t best_index = 0;

  const Candidate& best() const { return candidates[best_index]; }
  double value() const { return candidates.empty() ? 0.0 : best().value; }
  const Subset& chosen() const { return best().set; }

  void add(std::string label, Subset set, double value) {
    candidates.push_back({std::move(label), std::move(set), value});
    const auto& c = candidates.back();
    const auto& b = candidates[best_index];
    if (c.value > b.value || (c.value == b.value && lex_less(c.set, b.set)))
      best_index = candidates.size() - 1;
  }
};

/// Two greedy passes plus an unconstrained refinement of the first:
///   S_1 = Greedy(X, k), S_1' = FMV(S_1), S_2 = Greedy(X \ S_1, k);
/// returns the best of the three. A (4 + alpha)-approximation for
/// non-negative submodular f under the cardinality constraint.
inline MultiPassResult submod_max_cardinality(const ValueOracle& f,
                                              const Subset& x, int k,
                                              const FmvBackend& backend,
                                              Rng& rng,
                                              bool stop_nonpositive = false) {
  if (k < 1) throw InvalidParameter("submod_max_cardinality: k must be >= 1");
  MultiPassResult result;
  const GreedyTrace t1 = greedy_cardinality(f, x, k, stop_nonpositive);
  const Subset s1 = t1.chosen_set();
  result.add("S1", s1, f.evaluate(s1));
  const Subset s1p = backend.run(f, s1, rng);
  result.add("S1'", s1p, f.evaluate(s1p));
  const GreedyTrace t2 =
      greedy_cardinality(f, set_difference(x, s1), k, stop_nonpositive);
  const Subset s2 = t2.chosen_set();
  result.add("S2", s2, f.evaluate(s2));
  return result;
}

/// p+1 greedy passes over shrinking ground sets, each refined by the
/// unconstrained backend; returns the best of the 2(p+1) candidates. A
/// (1+alpha)(p + 2 + 1/p)-approximation over a p-independence system.
/// `passes` overrides the pass count (at least 2 passes retain the weaker
/// cross-sums bound); 0 means the default p+1.
inline MultiPassResult submod_max_psystem(const ValueOracle& f,
                                          const Subset& x,
                                          const IndependenceOracle& sys, int p,
                                          const FmvBackend& backend, Rng& rng,
                                          int passes = 0) {
  if (p < 1) throw InvalidParameter("submod_max_psystem: p must be >= 1");
  if (passes <= 0) passes = p + 1;
  MultiPassResult result;
  Subset ground = x;
  for (int i = 1; i <= passes; ++i) {
    const GreedyTrace t = greedy_psystem(f, ground, sys);
    const Subset si = t.chosen_set();
    result.add("S" + std::to_string(i), si, f.evaluate(si));
    const Subset sip = backend.run(f, si, rng);
    result.add("S" + std::to_string(i) + "'", sip, f.evaluate(sip));
    ground = set_difference(ground, si);
    if (ground.empty()) break;
  }
  return result;
}

namespace detail {

struct SubsetHash {
  std::size_t operator()(const Subset& s) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : s) {
      h ^= static_cast<std::size_t>(e) + 0x9E3779B9u;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

/// Partial-enumeration candidate collection for a knapsack constraint over
/// the elements of `x`: every feasible set of cardinality at most 3, plus
/// every prefix of the density-greedy extension of each feasible size-3
/// seed. The extension adds the element maximizing marginal value per unit
/// size (ties: lowest index), stops at non-positive density, and
/// skips-and-drops elements that would overflow the budget. For every
/// feasible C the collection contains some S with f(S) >= f(S u C) / 2.
inline std::vector<Subset> knapsack_candidate_collection(
    const ValueOracle& f, const std::vector<std::int64_t>& sizes,
    std::int64_t budget, const Subset& x) {
  require_canonical(x, f.ground_size(), "knapsack_candidate_collection");
  if (sizes.size() != static_cast<std::size_t>(f.ground_size()))
    throw InvalidConfig("knapsack_candidate_collection: one size per element");
  auto size_of = [&](const Subset& s) {
    std::int64_t total = 0;
    for (int e : s) total += sizes[static_cast<std::size_t>(e)];
    return total;
  };

  std::vector<Subset> collection;
  std::unordered_set<Subset, detail::SubsetHash> seen;
  auto emit = [&](const Subset& s) {
    if (seen.insert(s).second) collection.push_back(s);
  };

  emit({});
  const int m = static_cast<int>(x.size());
  std::vector<Subset> seeds;
  for (int a = 0; a < m; ++a) {
    const Subset sa = {x[static_cast<std::size_t>(a)]};
    if (size_of(sa) <= budget) emit(sa);
    for (int b = a + 1; b < m; ++b) {
      const Subset sb = {x[static_cast<std::size_t>(a)], x[static_cast<std::size_t>(b)]};
      if (size_of(sb) <= budget) emit(sb);
      for (int c = b + 1; c < m; ++c) {
        const Subset sc = {x[static_cast<std::size_t>(a)], x[static_cast<std::size_t>(b)],
                           x[static_cast<std::size_t>(c)]};
        if (size_of(sc) <= budget) {
          emit(sc);
          seeds.push_back(sc);
        }
      }
    }
  }

  for (const Subset& seed : seeds) {
    Subset s = seed;
    std::int64_t used = size_of(s);
    double value = f.evaluate(s);
    std::vector<char> dropped(x.size(), 0);
    for (;;) {
      int best = -1;
      std::size_t best_pos = 0;
      double best_density = 0.0;
      double best_delta = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const int e = x[i];
        if (dropped[i] || contains(s, e)) continue;
        const double delta = marginal_given(f, s, value, e);
        const double density =
            delta / static_cast<double>(sizes[static_cast<std::size_t>(e)]);
        if (best < 0 || density > best_density) {
          best = e;
          best_pos = i;
          best_density = density;
          best_delta = delta;
        }
      }
      if (best < 0 || best_density <= 0.0) break;
      if (used + sizes[static_cast<std::size_t>(best)] <= budget) {
        s = with_element(s, best);
        used += sizes[static_cast<std::size_t>(best)];
        value += best_delta;
        emit(s);
      } else {
        dropped[best_pos] = 1;
      }
    }
  }
  return collection;
}

/// Knapsack wrapper: evaluates every first-pass candidate T together with
/// its unconstrained refinement and the best member of a second-pass
/// collection built on X \ T; returns the global best. With fast_m > 0,
/// only the fast_m most valuable first-pass candidates get a second pass
/// (no certified bound in that mode).
inline MultiPassResult submod_max_knapsack(const ValueOracle& f,
                                           const std::vector<std::int64_t>& sizes,
                                           std::int64_t budget,
                                           const FmvBackend& backend, Rng& rng,
                                           int fast_m = 0) {
  MultiPassResult result;
  const Subset ground = full_set(f.ground_size());
  const std::vector<Subset> first = knapsack_candidate_collection(
      f, sizes, budget, ground);

  std::vector<std::pair<double, std::size_t>> ranked;
  ranked.reserve(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    const double v = f.evaluate(first[i]);
    result.add("T" + std::to_string(i), first[i], v);
    ranked.push_back({v, i});
  }
  std::vector<std::size_t> second_pass_of;
  if (fast_m > 0 && static_cast<std::size_t>(fast_m) < ranked.size()) {
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.first > b.first || (a.first == b.first && a.second < b.second);
    });
    for (int i = 0; i < fast_m; ++i) second_pass_of.push_back(ranked[static_cast<std::size_t>(i)].second);
    std::sort(second_pass_of.begin(), second_pass_of.end());
  } else {
    for (std::size_t i = 0; i < first.size(); ++i) second_pass_of.push_back(i);
  }

  for (std::size_t i : second_pass_of) {
    const Subset& t = first[i];
    const Subset tp = backend.run(f, t, rng);
    result.add("T" + std::to_string(i) + "'", tp, f.evaluate(tp));
    const Subset rest = set_difference(ground, t);
    Subset best_u;
    double best_value = 0.0;
    bool have = false;
    for (const Subset& u :
         knapsack_candidate_collection(f, sizes, budget, rest)) {
      const double v = f.evaluate(u);
      if (!have || v > best_value || (v == best_value && lex_less(u, best_u))) {
        best_u = u;
        best_value = v;
        have = true;
      }
    }
    if (have) result.add("U" + std::to_string(i), best_u, best_value);
  }
  return result;
}

}  // namespace submax
