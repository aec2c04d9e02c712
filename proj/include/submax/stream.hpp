#pragma once

#include <vector>

#include "submax/errors.hpp"
#include "submax/rng.hpp"
#include "submax/subset.hpp"

namespace submax {

/// An arrival order over the ground set: a permutation of 0..n-1. Element
/// order[t] arrives at position t.
struct Stream {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }

  static Stream uniform(int n, Rng& rng) { return Stream{rng.permutation(n)}; }

  static Stream from_order(std::vector<int> order) {
    Stream s{std::move(order)};
    std::vector<char> seen(s.order.size(), 0);
    for (int e : s.order) {
      if (e < 0 || e >= s.size() || seen[static_cast<std::size_t>(e)])
        throw InvalidSubset("Stream: order must be a permutation of 0..n-1");
      seen[static_cast<std::size_t>(e)] = 1;
    }
    return s;
  }
};

/// Irrevocable-decision policy: observe() is called once per arrival in
/// stream order; the selected set only ever grows, and decisions at
/// position t depend only on arrivals at positions <= t.
class OnlinePolicy {
 public:
  virtual ~OnlinePolicy() = default;

  /// Returns true iff the arriving element was (irrevocably) selected.
  bool observe(int element) {
    const std::size_t before = selected_.size();
    const bool took = decide(element);
    // selected grows by exactly the accepted element, never shrinks
    if (selected_.size() < before ||
        selected_.size() != before + (took ? 1u : 0u))
      throw ContractViolation("OnlinePolicy: selection must be irrevocable");
    return took;
  }

  const Subset& selected() const { return selected_; }

 protected:
  virtual bool decide(int element) = 0;

  void accept(int element) { selected_ = with_element(selected_, element); }

 private:
  Subset selected_;
};

/// Feeds a full stream through a policy and returns the final selection.
inline Subset run_policy(OnlinePolicy& policy, const Stream& stream) {
  for (int e : stream.order) policy.observe(e);
  return policy.selected();
}

}  // namespace submax
