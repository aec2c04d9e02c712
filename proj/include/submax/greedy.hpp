#pragma once

#include <vector>

#include "submax/constraints.hpp"
#include "submax/subset.hpp"
#include "submax/value_oracle.hpp"

namespace submax {

/// Step-by-step record of a greedy run. The picked elements e_1..e_t are in
/// pick order with their marginal values delta_i = f_{S_{i-1}}(e_i); the
/// deltas telescope to f(final set). `discarded` lists elements that were
/// skipped because adding them would violate the constraint.
struct GreedyTrace {
  std::vector<int> picked;
  std::vector<double> deltas;
  std::vector<int> discarded;
  double final_value = 0.0;

  Subset chosen_set() const {
    Subset s = picked;
    std::sort(s.begin(), s.end());
    return s;
  }
};

/// Greedy for the cardinality constraint: repeatedly add the element of X
/// with maximum marginal value (ties: lowest index) until |S| = min(k, |X|).
/// Elements are added even when the best marginal is negative; that literal
/// rule is what the half-bound analysis relies on. stop_nonpositive switches
/// to the early-stopping variant, which carries no certified bound here.
inline GreedyTrace greedy_cardinality(const ValueOracle& f, const Subset& x,
                                      int k, bool stop_nonpositive = false) {
  require_canonical(x, f.ground_size(), "greedy_cardinality");
  GreedyTrace trace;
  Subset s;
  double value = 0.0;
  while (static_cast<int>(s.size()) < k &&
         s.size() < x.size()) {
    int best = -1;
    double best_delta = 0.0;
    for (int e : x) {
      if (contains(s, e)) continue;
      const double delta = marginal_given(f, s, value, e);
      if (best < 0 || delta > best_delta) {
        best = e;
        best_delta = delta;
      }
    }
    if (best < 0) break;
    if (stop_nonpositive && best_delta <= 0.0) break;
    s = with_element(s, best);
    value += best_delta;
    trace.picked.push_back(best);
    trace.deltas.push_back(best_delta);
  }
  trace.final_value = value;
  return trace;
}

/// Greedy for a downward-closed independence system: each step adds the
/// max-marginal element keeping S independent (ties: lowest index), even at
/// negative marginal gain, and stops only when no element can be added.
/// The output is a basis of X.
inline GreedyTrace greedy_psystem(const ValueOracle& f, const Subset& x,
                                  const IndependenceOracle& sys) {
  require_canonical(x, f.ground_size(), "greedy_psystem");
  GreedyTrace trace;
  Subset s;
  double value = 0.0;
  std::vector<char> dead(x.size(), 0);  // known dependent extensions
  for (;;) {
    int best = -1;
    double best_delta = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const int e = x[i];
      if (contains(s, e) || dead[i]) continue;
      if (!sys.is_independent(with_element(s, e))) {
        dead[i] = 1;
        trace.discarded.push_back(e);
        continue;
      }
      const double delta = marginal_given(f, s, value, e);
      if (best < 0 || delta > best_delta) {
        best = e;
        best_delta = delta;
      }
    }
    if (best < 0) break;
    s = with_element(s, best);
    value += best_delta;
    trace.picked.push_back(best);
    trace.deltas.push_back(best_delta);
  }
  trace.final_value = value;
  return trace;
}

}  // namespace submax
