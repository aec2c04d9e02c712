#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/errors.hpp"
#include "submax/rng.hpp"
#include "submax/secretary.hpp"
#include "submax/stream.hpp"
#include "submax/value_oracle.hpp"

namespace submax {

/// The three coupled run modes of the partition-matroid secretary
/// algorithms. A and B select a Dynkin/epoch trigger on heads, C on tails;
/// B additionally keeps each selection in the output only with probability
/// 1/2, decided at arrival ("marking").
enum class PartitionMode { a = 0, b = 1, c = 2 };

/// Secretary algorithm for a partition matroid when each group arrives as
/// one contiguous block (random order inside the block, arbitrary block
/// order). Per group it runs Dynkin's rule under the marginal valuation
/// frozen at the group boundary; a trigger is kept according to the mode's
/// coin convention. The run set drives later valuations even when mode-B
/// marking leaves an element out of the output.
class PartitionContiguousPolicy : public OnlinePolicy {
 public:
  PartitionContiguousPolicy(const ValueOracle& f, const PartitionMatroid& part,
                            Rng& rng,
                            std::optional<PartitionMode> force_mode = std::nullopt)
      : f_(f), part_(part), rng_(rng) {
    if (part.ground_size() != f.ground_size())
      throw InvalidConfig(
          "PartitionContiguousPolicy: partition and oracle ground sets differ");
    mode_ = force_mode ? *force_mode
                       : static_cast<PartitionMode>(rng_.uniform_int(3));
    group_seen_.assign(static_cast<std::size_t>(part.group_count()), 0);
  }

  PartitionMode mode() const { return mode_; }
  /// The run set: every coin-accepted trigger, including mode-B elements
  /// that were marked but not output.
  const Subset& run_set() const { return run_set_; }

 protected:
  bool decide(int e) override {
    const int g = part_.group_of(e);
    if (g != current_group_) {
      if (group_seen_[static_cast<std::size_t>(g)])
        throw ContractViolation(
            "PartitionContiguousPolicy: groups must arrive contiguously");
      group_seen_[static_cast<std::size_t>(g)] = 1;
      current_group_ = g;
      frozen_base_ = run_set_;
      frozen_value_ = f_.evaluate(frozen_base_);
      tracker_.emplace(
          static_cast<int>(part_.groups()[static_cast<std::size_t>(g)].size()));
    }
    if (tracker_->triggered()) {
      tracker_->feed(0.0);  // keep the arrival count moving
      return false;
    }
    const double value = marginal_given(f_, frozen_base_, frozen_value_, e);
    if (!tracker_->feed(value)) return false;
    const bool heads = rng_.bernoulli(0.5);
    const bool keep = (mode_ == PartitionMode::c) ? !heads : heads;
    if (!keep) return false;
    run_set_ = with_element(run_set_, e);
    if (mode_ == PartitionMode::b && !rng_.bernoulli(0.5)) return false;
    accept(e);
    return true;
  }

 private:
  const ValueOracle& f_;
  const PartitionMatroid& part_;
  Rng& rng_;
  PartitionMode mode_;
  std::vector<char> group_seen_;
  int current_group_ = -1;
  std::optional<DynkinTracker> tracker_;
  Subset frozen_base_;
  double frozen_value_ = 0.0;
  Subset run_set_;
};

inline Subset partition_contiguous_secretary(const ValueOracle& f,
                                             const PartitionMatroid& part,
                                             const Stream& stream, Rng& rng) {
  PartitionContiguousPolicy policy(f, part, rng);
  return run_policy(policy, stream);
}

/// Builds a group-contiguous stream: groups in random order, elements in
/// random order within each group.
inline Stream contiguous_stream(const PartitionMatroid& part, Rng& rng) {
  const auto group_order = rng.permutation(part.group_count());
  std::vector<int> order;
  for (int g : group_order) {
    const auto& members = part.groups()[static_cast<std::size_t>(g)];
    const auto inner = rng.permutation(static_cast<int>(members.size()));
    for (int i : inner) order.push_back(members[static_cast<std::size_t>(i)]);
  }
  return Stream::from_order(std::move(order));
}

/// Epoch layout of the general partition-matroid secretary: a sample of
/// N_0 ~ Binomial(n, 1/2) arrivals, then one epoch per group of
/// N_i ~ Binomial(n, 1/100k) arrivals each. Epochs are consecutive and
/// disjoint; whatever extends past the stream end is truncated and
/// arrivals after the last epoch are ignored.
struct EpochSchedule {
  int sample_count = 0;
  std::vector<int> epoch_lengths;
  std::vector<int> boundaries;  // boundaries[j] = first position of epoch j+1

  static EpochSchedule draw(int n, int k, Rng& rng) {
    EpochSchedule s;
    s.sample_count = rng.binomial(n, 0.5);
    s.boundaries.push_back(s.sample_count);
    for (int i = 0; i < k; ++i) {
      const int len = rng.binomial(n, 1.0 / (100.0 * k));
      s.epoch_lengths.push_back(len);
      s.boundaries.push_back(s.boundaries.back() + len);
    }
    return s;
  }

  /// Epoch index (0-based) containing position pos, -1 for the sample,
  /// k for ignored positions past the last epoch.
  int epoch_of(int pos) const {
    if (pos < sample_count) return -1;
    for (std::size_t j = 0; j + 1 < boundaries.size(); ++j)
      if (pos < boundaries[j + 1]) return static_cast<int>(j);
    return static_cast<int>(epoch_lengths.size());
  }
};

/// Secretary algorithm for a partition matroid under fully random arrival
/// order. After the sample it runs one epoch per group; during epoch j an
/// arrival triggers the mode coin if its group has no selection yet and its
/// marginal value (under the valuation frozen at the start of epoch j)
/// strictly exceeds that of every element of its group that arrived before
/// epoch j. Mode semantics match the contiguous algorithm.
class PartitionGeneralPolicy : public OnlinePolicy {
 public:
  PartitionGeneralPolicy(const ValueOracle& f, const PartitionMatroid& part,
                         Rng& rng,
                         std::optional<PartitionMode> force_mode = std::nullopt)
      : f_(f), part_(part), rng_(rng) {
    if (part.ground_size() != f.ground_size())
      throw InvalidConfig(
          "PartitionGeneralPolicy: partition and oracle ground sets differ");
    mode_ = force_mode ? *force_mode
                       : static_cast<PartitionMode>(rng_.uniform_int(3));
    schedule_ = EpochSchedule::draw(f.ground_size(), part.group_count(), rng_);
    arrivals_by_group_.assign(static_cast<std::size_t>(part.group_count()), {});
    group_taken_.assign(static_cast<std::size_t>(part.group_count()), 0);
    memo_value_.assign(static_cast<std::size_t>(f.ground_size()), 0.0);
    memo_epoch_.assign(static_cast<std::size_t>(f.ground_size()), -2);
  }

  PartitionMode mode() const { return mode_; }
  const EpochSchedule& schedule() const { return schedule_; }
  const Subset& run_set() const { return run_set_; }

 protected:
  bool decide(int e) override {
    const int pos = position_++;
    const int epoch = schedule_.epoch_of(pos);
    const int g = part_.group_of(e);
    if (epoch < 0 || epoch >= part_.group_count()) {
      record_arrival(g, e, pos);
      return false;
    }
    if (epoch != current_epoch_) {
      current_epoch_ = epoch;
      epoch_start_pos_ = schedule_.boundaries[static_cast<std::size_t>(epoch)];
      frozen_base_ = run_set_;
      frozen_value_ = f_.evaluate(frozen_base_);
    }
    const bool group_free = !group_taken_[static_cast<std::size_t>(g)];
    bool trigger = false;
    if (group_free) {
      const double value = valuation(e);
      double best_prior = -std::numeric_limits<double>::infinity();
      for (const auto& [other, arrived_at] :
           arrivals_by_group_[static_cast<std::size_t>(g)]) {
        if (arrived_at >= epoch_start_pos_) break;  // arrivals are in order
        best_prior = std::max(best_prior, valuation(other));
      }
      trigger = value > best_prior;
    }
    record_arrival(g, e, pos);
    if (!trigger) return false;
    const bool heads = rng_.bernoulli(0.5);
    const bool keep = (mode_ == PartitionMode::c) ? !heads : heads;
    if (!keep) return false;
    run_set_ = with_element(run_set_, e);
    group_taken_[static_cast<std::size_t>(g)] = 1;
    if (mode_ == PartitionMode::b && !rng_.bernoulli(0.5)) return false;
    accept(e);
    return true;
  }

 private:
  void record_arrival(int g, int e, int pos) {
    arrivals_by_group_[static_cast<std::size_t>(g)].push_back({e, pos});
  }

  double valuation(int e) {
    if (memo_epoch_[static_cast<std::size_t>(e)] != current_epoch_) {
      memo_value_[static_cast<std::size_t>(e)] =
          marginal_given(f_, frozen_base_, frozen_value_, e);
      memo_epoch_[static_cast<std::size_t>(e)] = current_epoch_;
    }
    return memo_value_[static_cast<std::size_t>(e)];
  }

  const ValueOracle& f_;
  const PartitionMatroid& part_;
  Rng& rng_;
  PartitionMode mode_;
  EpochSchedule schedule_;
  int position_ = 0;
  int current_epoch_ = -2;
  int epoch_start_pos_ = 0;
  Subset frozen_base_;
  double frozen_value_ = 0.0;
  Subset run_set_;
  std::vector<std::vector<std::pair<int, int>>> arrivals_by_group_;
  std::vector<char> group_taken_;
  std::vector<double> memo_value_;
  std::vector<int> memo_epoch_;
};

inline Subset partition_general_secretary(const ValueOracle& f,
                                          const PartitionMatroid& part,
                                          const Stream& stream, Rng& rng) {
  PartitionGeneralPolicy policy(f, part, rng);
  return run_policy(policy, stream);
}

}  // namespace submax
