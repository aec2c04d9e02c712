#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "submax/errors.hpp"
#include "submax/offline.hpp"
#include "submax/rng.hpp"
#include "submax/stream.hpp"
#include "submax/subset.hpp"
#include "submax/unconstrained.hpp"
#include "submax/value_oracle.hpp"

namespace submax {

/// Number of arrivals Dynkin's rule observes before it starts selecting:
/// floor(n / e).
inline int dynkin_sample_size(int n) {
  return static_cast<int>(std::floor(static_cast<double>(n) / std::exp(1.0)));
}

/// Streaming implementation of Dynkin's rule: feed the valuation of each
/// arrival in order; the first post-sample arrival whose value strictly
/// exceeds every sampled value triggers. Ties never trigger; with an empty
/// sample the first arrival triggers.
class DynkinTracker {
 public:
  explicit DynkinTracker(int total)
      : total_(total), sample_(dynkin_sample_size(total)) {}

  bool feed(double value) {
    ++seen_;
    if (seen_ <= sample_) {
      best_sample_ = std::max(best_sample_, value);
      return false;
    }
    if (triggered_) return false;
    if (value > best_sample_) {
      triggered_ = true;
      return true;
    }
    return false;
  }

  bool triggered() const { return triggered_; }
  int sample_size() const { return sample_; }
  int seen() const { return seen_; }

 private:
  int total_;
  int sample_;
  int seen_ = 0;
  double best_sample_ = -std::numeric_limits<double>::infinity();
  bool triggered_ = false;
};

/// Classical secretary rule over a whole stream with a fixed valuation;
/// returns the selected element, if any.
inline std::optional<int> dynkin(const Stream& stream,
                                 const std::function<double(int)>& valuation) {
  DynkinTracker tracker(stream.size());
  for (int e : stream.order)
    if (tracker.feed(valuation(e))) return e;
  return std::nullopt;
}

/// Policy wrapper: Dynkin on singleton values f({e}).
class DynkinPolicy : public OnlinePolicy {
 public:
  DynkinPolicy(const ValueOracle& f, int n) : f_(f), tracker_(n) {}

 protected:
  bool decide(int e) override {
    if (tracker_.feed(f_.evaluate({e}))) {
      accept(e);
      return true;
    }
    return false;
  }

 private:
  const ValueOracle& f_;
  DynkinTracker tracker_;
};

/// Threshold rule (tau, k): accept any arrival with marginal value at least
/// tau, up to k accepts. Guarantees, for any arrival order and any feasible
/// C*: either |S| = k (so f(S) >= tau k), or f(S) >= f(S u C*) - |C*| tau.
class ThresholdPolicy : public OnlinePolicy {
 public:
  ThresholdPolicy(const ValueOracle& f, double tau, int k)
      : f_(f), tau_(tau), k_(k) {
    if (k < 1) throw InvalidParameter("ThresholdPolicy: k must be >= 1");
  }

 protected:
  bool decide(int e) override {
    if (static_cast<int>(selected().size()) >= k_) return false;
    const double delta = marginal_given(f_, selected(), value_, e);
    if (delta >= tau_) {
      accept(e);
      value_ += delta;
      return true;
    }
    return false;
  }

 private:
  const ValueOracle& f_;
  double tau_;
  int k_;
  double value_ = 0.0;
};

inline Subset threshold_online(const ValueOracle& f, const Stream& stream,
                               double tau, int k) {
  ThresholdPolicy policy(f, tau, k);
  return run_policy(policy, stream);
}

/// Advice-taking online algorithm for the cardinality constraint. Given an
/// estimate Z of OPT it sets tau = Z / (7k), pre-commits to one of the
/// three coupled solutions {S1, S1', S2} uniformly at random, and runs the
/// coupled threshold passes online:
///   S1  = threshold accepts;
///   S1' = each S1 accept kept with probability 1/2, decided at arrival;
///   S2  = threshold accepts among elements S1 did not take.
/// E[f(returned)] >= Z / 21 when Z <= OPT.
class AdviceCardinalityPolicy : public OnlinePolicy {
 public:
  enum class Branch { s1 = 0, s1_prime = 1, s2 = 2 };

  AdviceCardinalityPolicy(const ValueOracle& f, int k, double advice, Rng& rng,
                          std::optional<Branch> force_branch = std::nullopt)
      : f_(f), k_(k), tau_(advice / (7.0 * k)), rng_(rng) {
    if (k < 1) throw InvalidParameter("AdviceCardinalityPolicy: k must be >= 1");
    if (advice < 0.0)
      throw InvalidParameter("AdviceCardinalityPolicy: advice must be >= 0");
    branch_ = force_branch ? *force_branch
                           : static_cast<Branch>(rng_.uniform_int(3));
  }

  Branch branch() const { return branch_; }
  const Subset& s1() const { return s1_; }
  const Subset& s1_prime() const { return s1p_; }
  const Subset& s2() const { return s2_; }

 protected:
  bool decide(int e) override {
    if (static_cast<int>(s1_.size()) < k_) {
      const double delta = marginal_given(f_, s1_, value1_, e);
      if (delta >= tau_) {
        s1_ = with_element(s1_, e);
        value1_ += delta;
        const bool keep = rng_.bernoulli(0.5);
        if (keep) s1p_ = with_element(s1p_, e);
        if (branch_ == Branch::s1 || (branch_ == Branch::s1_prime && keep)) {
          accept(e);
          return true;
        }
        return false;
      }
    }
    if (static_cast<int>(s2_.size()) < k_) {
      const double delta = marginal_given(f_, s2_, value2_, e);
      if (delta >= tau_) {
        s2_ = with_element(s2_, e);
        value2_ += delta;
        if (branch_ == Branch::s2) {
          accept(e);
          return true;
        }
      }
    }
    return false;
  }

 private:
  const ValueOracle& f_;
  int k_;
  double tau_;
  Rng& rng_;
  Branch branch_;
  Subset s1_, s1p_, s2_;
  double value1_ = 0.0, value2_ = 0.0;
};

inline Subset advice_online_cardinality(const ValueOracle& f,
                                        const Stream& stream, int k, double advice,
                                        Rng& rng) {
  AdviceCardinalityPolicy policy(f, k, advice, rng);
  return run_policy(policy, stream);
}

/// The secretary algorithm for a cardinality constraint. A fair coin picks
/// between (a) Dynkin's rule on singleton values, and (b) estimating OPT by
/// running the offline multi-pass algorithm on a Binomial(n, 1/2) prefix,
/// then feeding that estimate to the advice-taking online algorithm on the
/// remaining arrivals.
class CardinalitySecretaryPolicy : public OnlinePolicy {
 public:
  CardinalitySecretaryPolicy(const ValueOracle& f, int n, int k,
                             const FmvBackend& backend, Rng& rng,
                             std::optional<bool> force_heads = std::nullopt)
      : f_(f), n_(n), k_(k), backend_(backend), rng_(rng) {
    if (k < 1)
      throw InvalidParameter("CardinalitySecretaryPolicy: k must be >= 1");
    heads_ = force_heads ? *force_heads : rng_.bernoulli(0.5);
    if (heads_) {
      dynkin_.emplace(n);
    } else {
      sample_count_ = rng_.binomial(n, 0.5);
    }
  }

  bool heads() const { return heads_; }
  double advice() const { return advice_; }

 protected:
  bool decide(int e) override {
    if (heads_) {
      if (dynkin_->feed(f_.evaluate({e}))) {
        accept(e);
        return true;
      }
      return false;
    }
    if (position_ < sample_count_) {
      ++position_;
      sample_.push_back(e);
      return false;
    }
    ++position_;
    if (!advice_policy_) {
      Subset observed = sample_;
      std::sort(observed.begin(), observed.end());
      const MultiPassResult offline =
          submod_max_cardinality(f_, observed, k_, backend_, rng_);
      advice_ = offline.value();
      advice_policy_ = std::make_unique<AdviceCardinalityPolicy>(
          f_, k_, advice_, rng_);
    }
    if (advice_policy_->observe(e)) {
      accept(e);
      return true;
    }
    return false;
  }

 private:
  const ValueOracle& f_;
  int n_;
  int k_;
  FmvBackend backend_;
  Rng& rng_;
  bool heads_ = false;
  std::optional<DynkinTracker> dynkin_;
  int sample_count_ = 0;
  int position_ = 0;
  std::vector<int> sample_;
  double advice_ = 0.0;
  std::unique_ptr<AdviceCardinalityPolicy> advice_policy_;
};

inline Subset submodular_secretaries(const ValueOracle& f, const Stream& stream,
                                     int k, const FmvBackend& backend,
                                     Rng& rng) {
  CardinalitySecretaryPolicy policy(f, stream.size(), k, backend, rng);
  return run_policy(policy, stream);
}

}  // namespace submax
