#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/errors.hpp"
#include "submax/subset.hpp"
#include "submax/value_oracle.hpp"

namespace submax {

inline constexpr int kBruteForceCap = 16;

/// Exact optimum by full enumeration. The argmax set is the
/// lexicographically smallest among exact-value ties.
struct BruteForceResult {
  double opt_value = 0.0;
  Subset opt_set;
  std::uint64_t feasible_count = 0;
  std::uint64_t enumerated_count = 0;
};

inline BruteForceResult brute_force_opt(
    const ValueOracle& f, const std::function<bool(const Subset&)>& feasible,
    int cap = kBruteForceCap) {
  const int n = f.ground_size();
  if (n > cap)
    throw CapExceeded("brute_force_opt: n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  BruteForceResult result;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ++result.enumerated_count;
    const Subset s = subset_from_mask(mask);
    if (!feasible(s)) continue;
    ++result.feasible_count;
    const double v = f.evaluate(s);
    if (!have || v > result.opt_value ||
        (v == result.opt_value && lex_less(s, result.opt_set))) {
      result.opt_value = v;
      result.opt_set = s;
      have = true;
    }
  }
  if (!have) {
    // no feasible set at all; report the empty outcome
    result.opt_value = 0.0;
    result.opt_set = {};
  }
  return result;
}

inline BruteForceResult brute_force_opt_constrained(
    const ValueOracle& f, const IndependenceOracle& sys, int cap = 14) {
  return brute_force_opt(
      f, [&](const Subset& s) { return sys.is_independent(s); }, cap);
}

inline BruteForceResult brute_force_opt_cardinality(const ValueOracle& f,
                                                    int k,
                                                    int cap = kBruteForceCap) {
  return brute_force_opt(
      f, [&](const Subset& s) { return static_cast<int>(s.size()) <= k; },
      cap);
}

/// Exact optimum under a partition matroid by enumerating one choice (or
/// none) per group; handles ground sets far beyond the subset-enumeration
/// cap as long as the product of (group size + 1) stays small.
inline BruteForceResult brute_force_opt_partition(const ValueOracle& f,
                                                  const PartitionMatroid& part,
                                                  std::uint64_t combo_cap = 1u << 24) {
  std::uint64_t combos = 1;
  for (const auto& g : part.groups()) {
    combos *= g.size() + 1;
    if (combos > combo_cap)
      throw CapExceeded("brute_force_opt_partition: too many combinations");
  }
  BruteForceResult result;
  bool have = false;
  const int k = part.group_count();
  std::vector<int> choice(static_cast<std::size_t>(k), -1);  // -1 = skip group
  std::function<void(int)> recurse = [&](int g) {
    if (g == k) {
      Subset s;
      for (int i = 0; i < k; ++i)
        if (choice[static_cast<std::size_t>(i)] >= 0)
          s.push_back(part.groups()[static_cast<std::size_t>(i)]
                                   [static_cast<std::size_t>(
                                       choice[static_cast<std::size_t>(i)])]);
      std::sort(s.begin(), s.end());
      ++result.enumerated_count;
      ++result.feasible_count;
      const double v = f.evaluate(s);
      if (!have || v > result.opt_value ||
          (v == result.opt_value && lex_less(s, result.opt_set))) {
        result.opt_value = v;
        result.opt_set = s;
        have = true;
      }
      return;
    }
    choice[static_cast<std::size_t>(g)] = -1;
    recurse(g + 1);
    const auto& members = part.groups()[static_cast<std::size_t>(g)];
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
      choice[static_cast<std::size_t>(g)] = i;
      recurse(g + 1);
    }
    choice[static_cast<std::size_t>(g)] = -1;
  };
  recurse(0);
  return result;
}

}  // namespace submax
