#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "submax/rng.hpp"
#include "submax/subset.hpp"
#include "submax/value_oracle.hpp"

namespace submax {

inline constexpr double kCheckTolerance = 1e-9;
inline constexpr int kExhaustiveCap = 14;

enum class CheckMode { exhaustive, sampled };

/// A counterexample to a pointwise property: the sets and element involved
/// plus the two sides of the violated inequality.
struct PropertyWitness {
  Subset s;
  Subset t;
  int element = -1;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

struct PropertyReport {
  bool holds = true;
  std::uint64_t checked = 0;
  std::optional<PropertyWitness> witness;
};

/// Verifies decreasing marginal utility: f_S(e) >= f_T(e) for all S <= T
/// and e outside T. Exhaustive mode enumerates every (S, T, e) triple from
/// a full value table (n <= cap required); sampled mode draws random
/// triples directly against the oracle.
inline PropertyReport check_submodular(const ValueOracle& f,
                                       CheckMode mode = CheckMode::exhaustive,
                                       std::uint64_t samples = 10000,
                                       std::uint64_t seed = 0,
                                       int cap = kExhaustiveCap,
                                       double tol = kCheckTolerance) {
  const int n = f.ground_size();
  PropertyReport report;
  if (mode == CheckMode::exhaustive) {
    if (n > cap)
      throw CapExceeded("check_submodular: n exceeds exhaustive cap");
    const auto table = value_table(f);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t t = 0; t <= all; ++t) {
      for (int e = 0; e < n; ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if (t & bit) continue;
        const double d_t = table[t | bit] - table[t];
        std::uint64_t s = t;
        for (;;) {
          const double d_s = table[s | bit] - table[s];
          ++report.checked;
          if (d_s < d_t - tol) {
            report.holds = false;
            report.witness = PropertyWitness{
                subset_from_mask(s), subset_from_mask(t), e, d_s, d_t,
                "marginal of e on S is below its marginal on T"};
            return report;
          }
          if (s == 0) break;
          s = (s - 1) & t;
        }
      }
    }
    return report;
  }
  if (n == 0) return report;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Subset t;
    for (int e = 0; e < n; ++e)
      if (rng.bernoulli(0.5)) t.push_back(e);
    Subset s;
    for (int e : t)
      if (rng.bernoulli(0.5)) s.push_back(e);
    int e = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
    if (contains(t, e)) continue;
    const double d_s = marginal(f, s, e);
    const double d_t = marginal(f, t, e);
    ++report.checked;
    if (d_s < d_t - tol) {
      report.holds = false;
      report.witness = PropertyWitness{s, t, e, d_s, d_t, "sampled violation"};
      return report;
    }
  }
  return report;
}

/// Verifies f(empty) = 0 and f(S) >= 0 for all S.
inline PropertyReport check_nonneg_and_zero(
    const ValueOracle& f, CheckMode mode = CheckMode::exhaustive,
    std::uint64_t samples = 10000, std::uint64_t seed = 0,
    int cap = kExhaustiveCap, double tol = kCheckTolerance) {
  const int n = f.ground_size();
  PropertyReport report;
  const double empty = f.evaluate({});
  ++report.checked;
  if (empty < -tol || empty > tol) {
    report.holds = false;
    report.witness =
        PropertyWitness{{}, {}, -1, empty, 0.0, "f(empty) is not 0"};
    return report;
  }
  auto violation = [&](const Subset& s, double v) {
    report.holds = false;
    report.witness = PropertyWitness{s, {}, -1, v, 0.0, "negative value"};
  };
  if (mode == CheckMode::exhaustive) {
    if (n > cap)
      throw CapExceeded("check_nonneg_and_zero: n exceeds exhaustive cap");
    const auto table = value_table(f);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      ++report.checked;
      if (table[mask] < -tol) {
        violation(subset_from_mask(mask), table[mask]);
        return report;
      }
    }
    return report;
  }
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Subset s;
    for (int e = 0; e < n; ++e)
      if (rng.bernoulli(0.5)) s.push_back(e);
    const double v = f.evaluate(s);
    ++report.checked;
    if (v < -tol) {
      violation(s, v);
      return report;
    }
  }
  return report;
}

/// Verifies monotonicity via single-element extensions: f(S + e) >= f(S).
inline PropertyReport check_monotone(const ValueOracle& f,
                                     CheckMode mode = CheckMode::exhaustive,
                                     std::uint64_t samples = 10000,
                                     std::uint64_t seed = 0,
                                     int cap = kExhaustiveCap,
                                     double tol = kCheckTolerance) {
  const int n = f.ground_size();
  PropertyReport report;
  if (mode == CheckMode::exhaustive) {
    if (n > cap) throw CapExceeded("check_monotone: n exceeds exhaustive cap");
    const auto table = value_table(f);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 0; s <= all; ++s) {
      for (int e = 0; e < n; ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if (s & bit) continue;
        ++report.checked;
        if (table[s | bit] < table[s] - tol) {
          report.holds = false;
          report.witness = PropertyWitness{
              subset_from_mask(s), subset_from_mask(s | bit), e,
              table[s | bit], table[s], "adding e decreases the value"};
          return report;
        }
      }
    }
    return report;
  }
  if (n == 0) return report;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Subset s;
    for (int e = 0; e < n; ++e)
      if (rng.bernoulli(0.5)) s.push_back(e);
    int e = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
    if (contains(s, e)) continue;
    const double lo = f.evaluate(s);
    const double hi = f.evaluate(with_element(s, e));
    ++report.checked;
    if (hi < lo - tol) {
      report.holds = false;
      report.witness = PropertyWitness{s, with_element(s, e), e, hi, lo,
                                       "sampled violation"};
      return report;
    }
  }
  return report;
}

}  // namespace submax
