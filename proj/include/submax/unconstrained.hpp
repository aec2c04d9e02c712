#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "submax/errors.hpp"
#include "submax/rng.hpp"
#include "submax/subset.hpp"
#include "submax/value_oracle.hpp"

namespace submax {

/// Uniformly random subset of S: each element kept independently with
/// probability 1/2, coins drawn in ascending index order. For non-negative
/// submodular f this is a 4-approximation to unconstrained maximization
/// over subsets of S, in expectation.
inline Subset fmv_random_subset(const ValueOracle& f, const Subset& s,
                                Rng& rng) {
  require_canonical(s, f.ground_size(), "fmv_random_subset");
  Subset out;
  for (int e : s)
    if (rng.bernoulli(0.5)) out.push_back(e);
  return out;
}

/// Deterministic value-oracle local search over subsets of S. Starts from
/// the best singleton, applies single-element add/remove moves that improve
/// the value by a factor of at least (1 + epsilon/|S|^2), and returns the
/// better of the local optimum L and S \ L.
inline Subset fmv_local_search(const ValueOracle& f, const Subset& s,
                               double epsilon = 1e-3) {
  require_canonical(s, f.ground_size(), "fmv_local_search");
  if (s.empty()) return {};
  Subset current;
  double best_single = 0.0;
  {
    bool first = true;
    for (int e : s) {
      const double v = f.evaluate({e});
      if (first || v > best_single) {
        current = {e};
        best_single = v;
        first = false;
      }
    }
  }
  const double n2 = static_cast<double>(s.size()) * static_cast<double>(s.size());
  const double factor = 1.0 + epsilon / n2;
  double value = best_single;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int e : s) {
      const bool inside = contains(current, e);
      const Subset next =
          inside ? without_element(current, e) : with_element(current, e);
      const double v = f.evaluate(next);
      if (v > value && v >= factor * value) {
        current = next;
        value = v;
        moved = true;
        break;
      }
    }
  }
  const Subset complement = set_difference(s, current);
  const double comp_value = f.evaluate(complement);
  return comp_value > value ? complement : current;
}

/// Exact unconstrained argmax over subsets of S by full enumeration; ties
/// resolve to the lexicographically smallest subset. |S| must be <= cap.
inline Subset fmv_exact(const ValueOracle& f, const Subset& s, int cap = 20) {
  require_canonical(s, f.ground_size(), "fmv_exact");
  if (static_cast<int>(s.size()) > cap)
    throw CapExceeded("fmv_exact: |S| = " + std::to_string(s.size()) +
                      " exceeds cap " + std::to_string(cap));
  const int m = static_cast<int>(s.size());
  Subset best;
  double best_value = f.evaluate({});
  Subset candidate;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    candidate.clear();
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i))
        candidate.push_back(s[static_cast<std::size_t>(i)]);
    const double v = f.evaluate(candidate);
    if (v > best_value || (v == best_value && lex_less(candidate, best))) {
      best = candidate;
      best_value = v;
    }
  }
  return best;
}

/// Pluggable unconstrained-maximization subroutine: returns T subset of S
/// with f(T) >= (1/alpha) max over subsets of S, where alpha depends on the
/// backend (4 for random subsets, 3 for local search, 1 for exact).
struct FmvBackend {
  enum class Kind { random_subset, local_search, exact_small };

  Kind kind = Kind::random_subset;
  double epsilon = 1e-3;  // local_search only
  int cap = 20;           // exact_small only

  static FmvBackend random() { return {Kind::random_subset, 1e-3, 20}; }
  static FmvBackend local(double eps = 1e-3) {
    return {Kind::local_search, eps, 20};
  }
  static FmvBackend exact(int cap = 20) {
    return {Kind::exact_small, 1e-3, cap};
  }

  double alpha() const {
    switch (kind) {
      case Kind::random_subset: return 4.0;
      case Kind::local_search: return 3.0;
      case Kind::exact_small: return 1.0;
    }
    return 4.0;
  }

  const char* name() const {
    switch (kind) {
      case Kind::random_subset: return "random";
      case Kind::local_search: return "local";
      case Kind::exact_small: return "exact";
    }
    return "random";
  }

  Subset run(const ValueOracle& f, const Subset& s, Rng& rng) const {
    switch (kind) {
      case Kind::random_subset: return fmv_random_subset(f, s, rng);
      case Kind::local_search: return fmv_local_search(f, s, epsilon);
      case Kind::exact_small: return fmv_exact(f, s, cap);
    }
    return {};
  }
};

inline FmvBackend fmv_backend_from_name(const std::string& name) {
  if (name == "random") return FmvBackend::random();
  if (name == "local") return FmvBackend::local();
  if (name == "exact") return FmvBackend::exact();
  throw InvalidConfig("unknown fmv backend: " + name);
}

}  // namespace submax
