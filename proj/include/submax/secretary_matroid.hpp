#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/errors.hpp"
#include "submax/rng.hpp"
#include "submax/stream.hpp"
#include "submax/subset.hpp"
#include "submax/value_oracle.hpp"

namespace submax {

/// Smallest i with 2^i >= x (x >= 1).
inline int ceil_log2(int x) {
  int i = 0;
  while ((1 << i) < x) ++i;
  return i;
}

/// The geometric threshold grid {w1 / 2^i : i = 0..ceil(log2(2k))} used by
/// the general-matroid algorithms. Strictly decreasing, length
/// 1 + ceil(log2(2k)). All logs here are base 2: the grid halves.
struct TauGrid {
  double w1 = 0.0;
  std::vector<double> grid;

  static TauGrid from_w1(double w1, int k) {
    if (k < 1) throw InvalidParameter("TauGrid: k must be >= 1");
    TauGrid g;
    g.w1 = w1;
    const int top = ceil_log2(2 * k);
    for (int i = 0; i <= top; ++i)
      g.grid.push_back(w1 / static_cast<double>(1 << i));
    return g;
  }
};

/// Result of the two-bucket threshold pass: both buckets plus the bucket
/// the final coin picked.
struct TwoBucketResult {
  Subset s1;
  Subset s2;
  int chosen = 0;  // 0 -> s1, 1 -> s2

  const Subset& chosen_set() const { return chosen == 0 ? s1 : s2; }
};

/// Streaming core of the two-bucket threshold rule: try S1 first, then S2,
/// else discard. An element enters a bucket iff its marginal value there is
/// at least eps * tau and the bucket stays independent.
class TwoBucketState {
 public:
  TwoBucketState(const ValueOracle& f, const IndependenceOracle& sys,
                 double tau, double eps)
      : f_(f), sys_(sys), threshold_(eps * tau) {}

  /// Returns the bucket the element entered: 0, 1, or -1 for discarded.
  int feed(int e) {
    const double d1 = marginal_given(f_, s1_, value1_, e);
    if (d1 >= threshold_ && sys_.is_independent(with_element(s1_, e))) {
      value1_ += d1;
      s1_ = with_element(s1_, e);
      return 0;
    }
    const double d2 = marginal_given(f_, s2_, value2_, e);
    if (d2 >= threshold_ && sys_.is_independent(with_element(s2_, e))) {
      value2_ += d2;
      s2_ = with_element(s2_, e);
      return 1;
    }
    return -1;
  }

  const Subset& s1() const { return s1_; }
  const Subset& s2() const { return s2_; }

 private:
  const ValueOracle& f_;
  const IndependenceOracle& sys_;
  double threshold_;
  Subset s1_, s2_;
  double value1_ = 0.0, value2_ = 0.0;
};

/// One pass of the two-bucket threshold rule over the given order, with a
/// uniform coin choosing which bucket to output. With eps = 2/5 the
/// expected value is at least |C*_tau| * tau / 10 for any arrival order.
inline TwoBucketResult matroid_threshold_offline(const ValueOracle& f,
                                                 const std::vector<int>& order,
                                                 const IndependenceOracle& sys,
                                                 double tau, double eps, Rng& rng) {
  TwoBucketState state(f, sys, tau, eps);
  for (int e : order) state.feed(e);
  TwoBucketResult result;
  result.s1 = state.s1();
  result.s2 = state.s2();
  result.chosen = rng.bernoulli(0.5) ? 0 : 1;
  return result;
}

inline constexpr double kTwoBucketEps = 0.4;  // the analysed setting, 2/5

/// Advice variant of the general-matroid algorithm: given the true maximum
/// singleton value w1, draw tau uniformly from the TauGrid and run one
/// two-bucket pass over the whole stream. Expected value is at least
/// OPT / (40 (1 + log2(2k))).
class MatroidAdvicePolicy : public OnlinePolicy {
 public:
  MatroidAdvicePolicy(const ValueOracle& f, const IndependenceOracle& sys,
                      int k, double w1, Rng& rng)
      : grid_(TauGrid::from_w1(w1, k)) {
    const auto i = rng.uniform_int(grid_.grid.size());
    tau_ = grid_.grid[static_cast<std::size_t>(i)];
    state_.emplace(f, sys, tau_, kTwoBucketEps);
    output_bucket_ = rng.bernoulli(0.5) ? 0 : 1;
  }

  double tau() const { return tau_; }
  int output_bucket() const { return output_bucket_; }

 protected:
  bool decide(int e) override {
    if (state_->feed(e) == output_bucket_) {
      accept(e);
      return true;
    }
    return false;
  }

 private:
  TauGrid grid_;
  double tau_ = 0.0;
  std::optional<TwoBucketState> state_;
  int output_bucket_ = 0;
};

/// Secretary algorithm for a general matroid of rank k (k supplied). It
/// rejects a Binomial(n, 1/2) sample, sets W to the best singleton value
/// seen there, draws i uniformly from {0, ..., 2 + ceil(log2(2k))}, and
/// runs the two-bucket threshold pass with tau = W / 2^i on the remaining
/// arrivals, outputting one pre-committed bucket.
class MatroidSecretaryPolicy : public OnlinePolicy {
 public:
  MatroidSecretaryPolicy(const ValueOracle& f, const IndependenceOracle& sys,
                         int n, int k, Rng& rng)
      : f_(f), sys_(sys), k_(k) {
    if (k < 1) throw InvalidParameter("MatroidSecretaryPolicy: k must be >= 1");
    sample_count_ = rng.binomial(n, 0.5);
    exponent_ = static_cast<int>(
        rng.uniform_int(static_cast<std::uint64_t>(3 + ceil_log2(2 * k))));
    output_bucket_ = rng.bernoulli(0.5) ? 0 : 1;
  }

  double tau() const { return tau_; }

 protected:
  bool decide(int e) override {
    if (position_ < sample_count_) {
      ++position_;
      best_sample_singleton_ =
          std::max(best_sample_singleton_, f_.evaluate({e}));
      return false;
    }
    ++position_;
    if (!state_) {
      tau_ = best_sample_singleton_ / static_cast<double>(1 << exponent_);
      state_.emplace(f_, sys_, tau_, kTwoBucketEps);
    }
    if (state_->feed(e) == output_bucket_) {
      accept(e);
      return true;
    }
    return false;
  }

 private:
  const ValueOracle& f_;
  const IndependenceOracle& sys_;
  int k_;
  int sample_count_ = 0;
  int exponent_ = 0;
  int output_bucket_ = 0;
  int position_ = 0;
  double best_sample_singleton_ = 0.0;
  double tau_ = 0.0;
  std::optional<TwoBucketState> state_;
};

inline Subset matroid_secretary(const ValueOracle& f,
                                const IndependenceOracle& sys,
                                const Stream& stream, int k, Rng& rng) {
  MatroidSecretaryPolicy policy(f, sys, stream.size(), k, rng);
  return run_policy(policy, stream);
}

}  // namespace submax
