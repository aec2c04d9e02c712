#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "submax/errors.hpp"
#include "submax/subset.hpp"
#include "submax/value_oracle.hpp"

namespace submax {

namespace detail {

/// Shared machinery for coverage-style functions: each element covers a set
/// of points of a weighted universe; the value of S is the weight of the
/// union of its members' point sets. Point sets are packed into 64-bit
/// blocks so evaluation is a handful of ORs.
struct CoverSets {
  int universe = 0;
  std::vector<std::vector<int>> covers;   // per element, sorted point ids
  std::vector<double> point_weights;      // empty means unit weights
  std::vector<std::vector<std::uint64_t>> masks;  // per element, packed

  void finalize() {
    const std::size_t blocks =
        static_cast<std::size_t>((universe + 63) / 64);
    masks.assign(covers.size(), std::vector<std::uint64_t>(blocks, 0));
    for (std::size_t e = 0; e < covers.size(); ++e) {
      for (int p : covers[e]) {
        if (p < 0 || p >= universe)
          throw InvalidConfig("coverage: point id out of range");
        masks[e][static_cast<std::size_t>(p) / 64] |=
            std::uint64_t{1} << (p % 64);
      }
    }
    if (!point_weights.empty() &&
        point_weights.size() != static_cast<std::size_t>(universe))
      throw InvalidConfig("coverage: weights must match universe size");
  }

  double value(const Subset& s) const {
    if (masks.empty()) return 0.0;
    const std::size_t blocks = masks.empty() ? 0 : masks[0].size();
    std::uint64_t small = 0;
    if (blocks <= 1) {
      for (int e : s) small |= masks[static_cast<std::size_t>(e)].empty()
                                   ? 0
                                   : masks[static_cast<std::size_t>(e)][0];
      return weight_of_block(small, 0);
    }
    std::vector<std::uint64_t> acc(blocks, 0);
    for (int e : s) {
      const auto& m = masks[static_cast<std::size_t>(e)];
      for (std::size_t b = 0; b < blocks; ++b) acc[b] |= m[b];
    }
    double total = 0.0;
    for (std::size_t b = 0; b < blocks; ++b)
      total += weight_of_block(acc[b], b);
    return total;
  }

  double weight_of_block(std::uint64_t bits, std::size_t block) const {
    if (point_weights.empty())
      return static_cast<double>(std::popcount(bits));
    double total = 0.0;
    while (bits) {
      int p = std::countr_zero(bits);
      total += point_weights[block * 64 + static_cast<std::size_t>(p)];
      bits &= bits - 1;
    }
    return total;
  }
};

}  // namespace detail

/// Modular (additive) function with non-negative element weights.
class ModularFunction : public ValueOracle {
 public:
  explicit ModularFunction(std::vector<double> weights)
      : ValueOracle(static_cast<int>(weights.size())),
        weights_(std::move(weights)) {}

  const std::vector<double>& weights() const { return weights_; }

 protected:
  double eval_impl(const Subset& s) const override {
    double total = 0.0;
    for (int e : s) total += weights_[static_cast<std::size_t>(e)];
    return total;
  }

 private:
  std::vector<double> weights_;
};

/// Weighted coverage: monotone and submodular by construction.
class CoverageFunction : public ValueOracle {
 public:
  CoverageFunction(int universe, std::vector<std::vector<int>> covers,
                   std::vector<double> point_weights = {})
      : ValueOracle(static_cast<int>(covers.size())) {
    data_.universe = universe;
    data_.covers = std::move(covers);
    data_.point_weights = std::move(point_weights);
    data_.finalize();
  }

  int universe_size() const { return data_.universe; }
  const std::vector<std::vector<int>>& covers() const { return data_.covers; }
  const std::vector<double>& point_weights() const {
    return data_.point_weights;
  }

 protected:
  double eval_impl(const Subset& s) const override { return data_.value(s); }

 private:
  detail::CoverSets data_;
};

/// Coverage minus a modular cost: submodular, typically non-monotone.
/// Instances are generated with costs small enough that the value stays
/// non-negative on every subset; the class itself does not clamp.
class CoverageMinusCostFunction : public ValueOracle {
 public:
  CoverageMinusCostFunction(int universe, std::vector<std::vector<int>> covers,
                            std::vector<double> costs,
                            std::vector<double> point_weights = {})
      : ValueOracle(static_cast<int>(covers.size())),
        costs_(std::move(costs)) {
    data_.universe = universe;
    data_.covers = std::move(covers);
    data_.point_weights = std::move(point_weights);
    data_.finalize();
    if (costs_.size() != data_.covers.size())
      throw InvalidConfig("coverage_minus_cost: one cost per element required");
  }

  int universe_size() const { return data_.universe; }
  const std::vector<std::vector<int>>& covers() const { return data_.covers; }
  const std::vector<double>& point_weights() const {
    return data_.point_weights;
  }
  const std::vector<double>& costs() const { return costs_; }

 protected:
  double eval_impl(const Subset& s) const override {
    double cost = 0.0;
    for (int e : s) cost += costs_[static_cast<std::size_t>(e)];
    return data_.value(s) - cost;
  }

 private:
  detail::CoverSets data_;
  std::vector<double> costs_;
};

/// Weighted undirected cut: f(S) = total weight of edges crossing
/// (S, complement). Symmetric, non-monotone, submodular, f(empty) = 0.
class CutFunction : public ValueOracle {
 public:
  /// Edges as (u, v, weight); parallel edges accumulate.
  CutFunction(int n, const std::vector<std::tuple<int, int, double>>& edges)
      : ValueOracle(n),
        weight_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0),
        edges_(edges) {
    for (const auto& [u, v, w] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw InvalidConfig("cut: edge endpoint out of range");
      if (u == v) continue;  // self-loops never cross a cut
      at(u, v) += w;
      at(v, u) += w;
    }
  }

  const std::vector<std::tuple<int, int, double>>& edges() const {
    return edges_;
  }

 protected:
  double eval_impl(const Subset& s) const override {
    // sum over u in S of row weight, minus the doubled inner (S,S) weight
    double total = 0.0;
    for (int u : s) {
      for (int v = 0; v < ground_size(); ++v)
        total += at_const(u, v);
      for (int v : s) total -= at_const(u, v);
    }
    return total;
  }

 private:
  double& at(int u, int v) {
    return weight_[static_cast<std::size_t>(u) *
                       static_cast<std::size_t>(ground_size()) +
                   static_cast<std::size_t>(v)];
  }
  double at_const(int u, int v) const {
    return weight_[static_cast<std::size_t>(u) *
                       static_cast<std::size_t>(ground_size()) +
                   static_cast<std::size_t>(v)];
  }

  std::vector<double> weight_;
  std::vector<std::tuple<int, int, double>> edges_;
};

/// The cover(R, S) coverage instance used by the online lower-bound
/// machinery. For each i in R there is an element i_B covering the single
/// point iB; for each i in S (a subset of R) there is an additional element
/// i_TB covering {iB, iT}. Elements are ordered: all i_B in ascending i,
/// then all i_TB in ascending i.
class CoverGadget : public ValueOracle {
 public:
  CoverGadget(std::vector<int> r, std::vector<int> s)
      : ValueOracle(static_cast<int>(r.size() + s.size())),
        r_(std::move(r)),
        s_(std::move(s)) {
    require_canonical(r_, r_.empty() ? 0 : r_.back() + 1, "CoverGadget R");
    for (int i : s_)
      if (!contains(r_, i))
        throw InvalidConfig("CoverGadget: S must be a subset of R");
    data_.universe = static_cast<int>(2 * r_.size());
    // point ids: iB = 2 * rank(i), iT = 2 * rank(i) + 1
    for (std::size_t j = 0; j < r_.size(); ++j) {
      data_.covers.push_back({static_cast<int>(2 * j)});
      labels_.push_back(std::to_string(r_[j]) + "_B");
    }
    for (int i : s_) {
      const auto rank = static_cast<std::size_t>(
          std::lower_bound(r_.begin(), r_.end(), i) - r_.begin());
      data_.covers.push_back(
          {static_cast<int>(2 * rank), static_cast<int>(2 * rank + 1)});
      labels_.push_back(std::to_string(i) + "_TB");
    }
    data_.finalize();
  }

  const std::vector<int>& r_set() const { return r_; }
  const std::vector<int>& s_set() const { return s_; }

  GroundSet ground() const { return GroundSet{ground_size(), labels_}; }

  /// Index of the element labelled i_B.
  int element_b(int i) const {
    return static_cast<int>(std::lower_bound(r_.begin(), r_.end(), i) -
                            r_.begin());
  }
  /// Index of the element labelled i_TB. Precondition: i in S.
  int element_tb(int i) const {
    return static_cast<int>(r_.size() +
                            static_cast<std::size_t>(
                                std::lower_bound(s_.begin(), s_.end(), i) -
                                s_.begin()));
  }

 protected:
  double eval_impl(const Subset& s) const override { return data_.value(s); }

 private:
  std::vector<int> r_, s_;
  std::vector<std::string> labels_;
  detail::CoverSets data_;
};

}  // namespace submax
