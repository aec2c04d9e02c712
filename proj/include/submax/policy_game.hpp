#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "submax/errors.hpp"
#include "submax/functions.hpp"
#include "submax/subset.hpp"

namespace submax {

/// Exact best-possible-online-policy computation for tiny instances with
/// hidden randomness, by expectimax over information states.
///
/// The policy observes arriving elements by label (so e.g. the doubled
/// cover-gadget element reveals which index was doubled only when it
/// arrives), must accept or reject immediately, and may hold at most k
/// elements. The hidden state is a world: a weighted alternative carrying
/// its own element-label list, admissible arrival orders (uniform among
/// them), and payoff function over accepted label multisets.
/// All worlds must carry the same number of elements, so arrival counts
/// never leak the hidden state.
struct PolicyGameWorld {
  double weight = 1.0;
  std::vector<int> labels;  // observable element identities, one per element
  std::vector<std::vector<int>> orders;  // admissible arrival orders (indices
                                         // into labels); uniform among them
  std::function<double(const std::vector<int>& accepted_labels)> payoff;
};

/// All |labels|! arrival orders.
inline std::vector<std::vector<int>> all_orders(int count) {
  std::vector<int> idx(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

/// Orders constrained to start with the element at `first`.
inline std::vector<std::vector<int>> orders_with_first(int count, int first) {
  std::vector<std::vector<int>> out;
  for (auto& o : all_orders(count))
    if (o.front() == first) out.push_back(std::move(o));
  return out;
}

namespace detail {

struct WorldOrder {
  const PolicyGameWorld* world;
  const std::vector<int>* order;
  double weight;  // world weight / number of orders in that world
};

/// Expectimax over the remaining arrivals. `consistent` holds every
/// (world, order) pair matching the observed prefix; all share the same
/// observed label sequence, so the policy's information state is exactly
/// (prefix length, accepted labels).
inline double expectimax(const std::vector<WorldOrder>& consistent,
                         std::size_t position,
                         std::vector<int>& accepted_labels, int remaining_k) {
  double total_weight = 0.0;
  for (const auto& wo : consistent) total_weight += wo.weight;
  if (consistent.empty() || position >= consistent[0].order->size()) {
    double value = 0.0;
    for (const auto& wo : consistent)
      value += wo.weight * wo.world->payoff(accepted_labels);
    return value / total_weight;
  }
  // group continuations by the label observed next
  std::vector<std::pair<int, std::vector<WorldOrder>>> by_label;
  for (const auto& wo : consistent) {
    const int label =
        wo.world->labels[static_cast<std::size_t>((*wo.order)[position])];
    auto it = std::find_if(by_label.begin(), by_label.end(),
                           [&](const auto& p) { return p.first == label; });
    if (it == by_label.end()) {
      by_label.push_back({label, {wo}});
    } else {
      it->second.push_back(wo);
    }
  }
  double value = 0.0;
  for (auto& [label, group] : by_label) {
    double group_weight = 0.0;
    for (const auto& wo : group) group_weight += wo.weight;
    const double reject =
        expectimax(group, position + 1, accepted_labels, remaining_k);
    double best = reject;
    if (remaining_k > 0) {
      accepted_labels.push_back(label);
      const double take =
          expectimax(group, position + 1, accepted_labels, remaining_k - 1);
      accepted_labels.pop_back();
      best = std::max(best, take);
    }
    value += group_weight * best;
  }
  return value / total_weight;
}

}  // namespace detail

/// Expected payoff of the optimal online policy for the given hidden-world
/// game with a cardinality budget of k. Exact backward induction; the
/// total number of (world, order) pairs is capped.
inline double optimal_online_policy_value(
    const std::vector<PolicyGameWorld>& worlds, int k,
    std::size_t state_cap = 200000) {
  std::vector<detail::WorldOrder> consistent;
  std::size_t pairs = 0;
  for (const auto& w : worlds) {
    if (w.orders.empty())
      throw InvalidParameter("optimal_online_policy_value: world without orders");
    pairs += w.orders.size();
    if (pairs > state_cap)
      throw CapExceeded("optimal_online_policy_value: state space above cap");
    for (const auto& o : w.orders)
      consistent.push_back(
          {&w, &o, w.weight / static_cast<double>(w.orders.size())});
  }
  std::vector<int> accepted;
  return detail::expectimax(consistent, 0, accepted, k);
}

/// The cover({a, b}, {r}) game: r is uniform over {a, b} and hidden until
/// the doubled element arrives. Labels: 0 -> a_B, 1 -> b_B, 2+i -> the
/// doubled element of world i (distinct labels, so its arrival reveals r).
/// Payoff is the coverage value; the offline optimum is 3.
inline std::vector<PolicyGameWorld> cover_gadget_game(bool reveal_first = false) {
  std::vector<PolicyGameWorld> worlds;
  for (int r = 0; r < 2; ++r) {
    PolicyGameWorld w;
    w.weight = 0.5;
    w.labels = {0, 1, 2 + r};
    w.orders = reveal_first ? orders_with_first(3, 2) : all_orders(3);
    w.payoff = [r](const std::vector<int>& accepted) {
      bool a_b = false, b_b = false, tb = false;
      for (int label : accepted) {
        if (label == 0) a_b = true;
        if (label == 1) b_b = true;
        if (label == 2 + r) tb = true;
      }
      // covered points: a_B -> {aB}, b_B -> {bB}, r_TB -> {rB, rT}
      double covered = 0.0;
      covered += (a_b || (tb && r == 0)) ? 1.0 : 0.0;  // aB
      covered += (b_b || (tb && r == 1)) ? 1.0 : 0.0;  // bB
      covered += tb ? 1.0 : 0.0;                       // rT
      return covered;
    };
    worlds.push_back(std::move(w));
  }
  return worlds;
}

/// Single-world game from an explicit value oracle: no hidden randomness,
/// uniformly random arrival order, element index i observed as label i.
inline std::vector<PolicyGameWorld> known_instance_game(const ValueOracle& f) {
  PolicyGameWorld w;
  w.weight = 1.0;
  const int n = f.ground_size();
  for (int i = 0; i < n; ++i) w.labels.push_back(i);
  w.orders = all_orders(n);
  w.payoff = [&f](const std::vector<int>& accepted) {
    Subset s(accepted.begin(), accepted.end());
    std::sort(s.begin(), s.end());
    return f.evaluate(s);
  };
  return {std::move(w)};
}

}  // namespace submax
