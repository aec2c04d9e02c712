#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "submax/errors.hpp"
#include "submax/subset.hpp"

namespace submax {

/// Value-oracle access to a set function f : 2^[n] -> R with f(empty) = 0.
/// Evaluation is pure except for the query counter, which is updated
/// atomically so oracles can be shared across concurrent readers.
class ValueOracle {
 public:
  explicit ValueOracle(int n) : n_(n) {}
  virtual ~ValueOracle() = default;

  ValueOracle(const ValueOracle& other) : n_(other.n_) {}
  ValueOracle& operator=(const ValueOracle&) = delete;

  int ground_size() const { return n_; }

  /// f(S). Counts as exactly one oracle query.
  double evaluate(const Subset& s) const {
    require_canonical(s, n_, "ValueOracle::evaluate");
    queries_.fetch_add(1, std::memory_order_relaxed);
    return eval_impl(s);
  }

  std::uint64_t query_count() const {
    return queries_.load(std::memory_order_relaxed);
  }

  void reset_query_count() const {
    queries_.store(0, std::memory_order_relaxed);
  }

 protected:
  virtual double eval_impl(const Subset& s) const = 0;

 private:
  int n_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

/// Marginal value f_S(e) = f(S + e) - f(S). Returns 0 when e is already in
/// S (a chosen element's marginal value is 0); may be negative otherwise.
inline double marginal(const ValueOracle& f, const Subset& s, int e) {
  if (e < 0 || e >= f.ground_size())
    throw InvalidSubset("marginal: element out of range");
  if (contains(s, e)) return 0.0;
  return f.evaluate(with_element(s, e)) - f.evaluate(s);
}

/// Marginal given a precomputed f(S); avoids re-evaluating the base set in
/// argmax loops.
inline double marginal_given(const ValueOracle& f, const Subset& s,
                             double f_of_s, int e) {
  if (contains(s, e)) return 0.0;
  return f.evaluate(with_element(s, e)) - f_of_s;
}

/// The restriction f_S(A) = f(S u A) - f(S). Submodular with f_S(empty) = 0
/// whenever f is; the base value f(S) is computed once at construction.
/// Holds a reference: the base oracle must outlive the restriction.
class RestrictedOracle : public ValueOracle {
 public:
  RestrictedOracle(const ValueOracle& base, Subset pinned)
      : ValueOracle(base.ground_size()),
        base_(base),
        pinned_(std::move(pinned)) {
    require_canonical(pinned_, base.ground_size(), "RestrictedOracle");
    base_value_ = base_.evaluate(pinned_);
  }

  const Subset& pinned() const { return pinned_; }

 protected:
  double eval_impl(const Subset& s) const override {
    if (s.empty()) return 0.0;
    return base_.evaluate(set_union(pinned_, s)) - base_value_;
  }

 private:
  const ValueOracle& base_;
  Subset pinned_;
  double base_value_;
};

inline RestrictedOracle restrict(const ValueOracle& f, const Subset& s) {
  return RestrictedOracle(f, s);
}

/// All 2^n values of f, indexed by subset bitmask. The workhorse behind the
/// exhaustive property checks and brute-force oracles.
inline std::vector<double> value_table(const ValueOracle& f, int cap = 24) {
  const int n = f.ground_size();
  if (n > cap)
    throw CapExceeded("value_table: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask)
    table[mask] = f.evaluate(subset_from_mask(mask));
  return table;
}

}  // namespace submax
