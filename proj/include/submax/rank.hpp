#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/errors.hpp"
#include "submax/subset.hpp"

namespace submax {

inline constexpr int kRankCap = 14;

/// Independence verdict for every subset of the ground set, indexed by
/// bitmask. One oracle call per subset; requires n <= cap.
inline std::vector<char> independence_table(const IndependenceOracle& sys,
                                            int cap = kRankCap) {
  const int n = sys.ground_size();
  if (n > cap)
    throw CapExceeded("independence_table: n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  std::vector<char> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask)
    table[mask] = sys.is_independent(subset_from_mask(mask)) ? 1 : 0;
  return table;
}

namespace detail {

/// (rank, lower rank) of the subset `smask` from a precomputed table:
/// the sizes of the largest and smallest inclusion-wise maximal independent
/// subsets of smask. Loops (dependent singletons) are skipped naturally;
/// for an all-loop or empty subset both ranks are 0.
inline std::pair<int, int> rank_pair_from_table(const std::vector<char>& table,
                                                std::uint64_t smask) {
  int max_rank = 0;
  int min_maximal = -1;
  // every independent subset of smask, by descending submask enumeration
  std::uint64_t t = smask;
  for (;;) {
    if (table[t]) {
      const int size = std::popcount(t);
      if (size > max_rank) max_rank = size;
      // maximal within smask iff no single element extends it
      std::uint64_t rest = smask & ~t;
      bool maximal = true;
      while (rest) {
        const std::uint64_t low = rest & (~rest + 1);
        if (table[t | low]) {
          maximal = false;
          break;
        }
        rest &= rest - 1;
      }
      if (maximal && (min_maximal < 0 || size < min_maximal))
        min_maximal = size;
    }
    if (t == 0) break;
    t = (t - 1) & smask;
  }
  return {max_rank, min_maximal < 0 ? 0 : min_maximal};
}

}  // namespace detail

/// Exact (r(S), rho(S)) by exhaustive enumeration over subsets of S.
inline std::pair<int, int> rank_and_lower_rank(const IndependenceOracle& sys,
                                               const Subset& s,
                                               int cap = kRankCap) {
  require_canonical(s, sys.ground_size(), "rank_and_lower_rank");
  if (static_cast<int>(s.size()) > cap)
    throw CapExceeded("rank_and_lower_rank: |S| exceeds cap");
  // local table over the elements of S only
  const int m = static_cast<int>(s.size());
  std::vector<char> table(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    Subset t;
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) t.push_back(s[static_cast<std::size_t>(i)]);
    table[mask] = sys.is_independent(t) ? 1 : 0;
  }
  return detail::rank_pair_from_table(table, (std::uint64_t{1} << m) - 1);
}

/// Exact rational p/q in lowest terms. p_parameter reports the certified
/// p-system parameter this way so matroids come out as exactly 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  bool operator==(const Rational&) const = default;
};

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  return Rational{g ? num / g : num, g ? den / g : den};
}

inline bool rational_less(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

/// Exact max over S of r(S)/rho(S), skipping subsets with rho(S) = 0
/// (the empty set and all-loop sets). Requires n <= cap.
inline Rational p_parameter(const IndependenceOracle& sys, int cap = kRankCap) {
  const auto table = independence_table(sys, cap);
  const std::uint64_t all = table.size() - 1;
  Rational best{0, 1};
  for (std::uint64_t smask = 1; smask <= all; ++smask) {
    const auto [r, rho] = detail::rank_pair_from_table(table, smask);
    if (rho == 0) continue;
    const Rational ratio = make_rational(r, rho);
    if (rational_less(best, ratio)) best = ratio;
  }
  return best;
}

/// Result of the exhaustive matroid-axiom verification.
struct AxiomReport {
  bool holds = true;
  std::string failed_axiom;  // "non-empty" | "downward-closure" | "exchange"
  Subset witness_a;
  Subset witness_b;
};

/// Exhaustively verifies the three matroid axioms. Downward closure is
/// checked in single-element-removal form and exchange in |B| = |A| + 1
/// form; both are equivalent to the unrestricted axioms for finite systems.
inline AxiomReport matroid_axiom_check(const IndependenceOracle& sys,
                                       int cap = kRankCap) {
  const auto table = independence_table(sys, cap);
  const int n = sys.ground_size();
  AxiomReport report;
  if (!table[0]) {
    report.holds = false;
    report.failed_axiom = "non-empty";
    return report;
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t a = 1; a < count; ++a) {
    if (!table[a]) continue;
    std::uint64_t rest = a;
    while (rest) {
      const std::uint64_t low = rest & (~rest + 1);
      if (!table[a & ~low]) {
        report.holds = false;
        report.failed_axiom = "downward-closure";
        report.witness_a = subset_from_mask(a & ~low);
        report.witness_b = subset_from_mask(a);
        return report;
      }
      rest &= rest - 1;
    }
  }
  // independent masks grouped by size
  std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t m = 0; m < count; ++m)
    if (table[m]) by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);
  for (int s = 0; s < n; ++s) {
    for (std::uint64_t a : by_size[static_cast<std::size_t>(s)]) {
      for (std::uint64_t b : by_size[static_cast<std::size_t>(s) + 1]) {
        std::uint64_t candidates = b & ~a;
        bool extended = false;
        while (candidates) {
          const std::uint64_t low = candidates & (~candidates + 1);
          if (table[a | low]) {
            extended = true;
            break;
          }
          candidates &= candidates - 1;
        }
        if (!extended) {
          report.holds = false;
          report.failed_axiom = "exchange";
          report.witness_a = subset_from_mask(a);
          report.witness_b = subset_from_mask(b);
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace submax
