#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "submax/errors.hpp"
#include "submax/subset.hpp"

namespace submax {

/// A downward-closed feasibility predicate over subsets of {0..n-1}.
/// Covers matroids, intersections of matroids, general p-systems and
/// knapsacks. Immutable after construction; safe for concurrent use.
class IndependenceOracle {
 public:
  explicit IndependenceOracle(int n) : n_(n) {}
  virtual ~IndependenceOracle() = default;

  int ground_size() const { return n_; }

  bool is_independent(const Subset& s) const {
    require_canonical(s, n_, "IndependenceOracle::is_independent");
    return indep_impl(s);
  }

 protected:
  virtual bool indep_impl(const Subset& s) const = 0;

 private:
  int n_;
};

/// All subsets of size at most k.
class UniformMatroid : public IndependenceOracle {
 public:
  UniformMatroid(int n, int k) : IndependenceOracle(n), k_(k) {
    if (k < 0) throw InvalidParameter("UniformMatroid: k must be >= 0");
  }
  int k() const { return k_; }

 protected:
  bool indep_impl(const Subset& s) const override {
    return static_cast<int>(s.size()) <= k_;
  }

 private:
  int k_;
};

/// At most one element from each group of a partition of the ground set.
class PartitionMatroid : public IndependenceOracle {
 public:
  explicit PartitionMatroid(std::vector<std::vector<int>> groups)
      : IndependenceOracle(count_elements(groups)), groups_(std::move(groups)) {
    group_of_.assign(static_cast<std::size_t>(ground_size()), -1);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (int e : groups_[g]) {
        if (e < 0 || e >= ground_size() ||
            group_of_[static_cast<std::size_t>(e)] != -1)
          throw InvalidConfig(
              "PartitionMatroid: groups must partition 0..n-1");
        group_of_[static_cast<std::size_t>(e)] = static_cast<int>(g);
      }
    }
  }

  const std::vector<std::vector<int>>& groups() const { return groups_; }
  int group_of(int e) const { return group_of_[static_cast<std::size_t>(e)]; }
  int group_count() const { return static_cast<int>(groups_.size()); }
  /// Rank = number of non-empty groups.
  int rank() const {
    int r = 0;
    for (const auto& g : groups_)
      if (!g.empty()) ++r;
    return r;
  }

 protected:
  bool indep_impl(const Subset& s) const override {
    std::vector<int> used(groups_.size(), 0);
    for (int e : s)
      if (++used[static_cast<std::size_t>(group_of(e))] > 1) return false;
    return true;
  }

 private:
  static int count_elements(const std::vector<std::vector<int>>& groups) {
    std::size_t total = 0;
    for (const auto& g : groups) total += g.size();
    return static_cast<int>(total);
  }

  std::vector<std::vector<int>> groups_;
  std::vector<int> group_of_;
};

/// Ground set = edges of a multigraph; independent sets are acyclic edge
/// sets (forests). Self-loop edges are matroid loops.
class GraphicMatroid : public IndependenceOracle {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges)
      : IndependenceOracle(static_cast<int>(edges.size())),
        vertices_(vertices),
        edges_(std::move(edges)) {
    for (const auto& [u, v] : edges_)
      if (u < 0 || u >= vertices_ || v < 0 || v >= vertices_)
        throw InvalidConfig("GraphicMatroid: edge endpoint out of range");
  }

  int vertex_count() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 protected:
  bool indep_impl(const Subset& s) const override {
    std::vector<int> parent(static_cast<std::size_t>(vertices_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (int e : s) {
      const auto& [u, v] = edges_[static_cast<std::size_t>(e)];
      int ru = find(u), rv = find(v);
      if (ru == rv) return false;  // closes a cycle (or is a self-loop)
      parent[static_cast<std::size_t>(ru)] = rv;
    }
    return true;
  }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

/// Intersection of member systems: independent iff independent in every
/// member. An intersection of p matroids is a p-independence system.
class IntersectionSystem : public IndependenceOracle {
 public:
  explicit IntersectionSystem(
      std::vector<std::shared_ptr<const IndependenceOracle>> members)
      : IndependenceOracle(members.empty() ? 0 : members[0]->ground_size()),
        members_(std::move(members)) {
    if (members_.empty())
      throw InvalidConfig("IntersectionSystem: needs at least one member");
    for (const auto& m : members_)
      if (m->ground_size() != ground_size())
        throw InvalidConfig(
            "IntersectionSystem: members must share one ground set");
  }

  const std::vector<std::shared_ptr<const IndependenceOracle>>& members()
      const {
    return members_;
  }

 protected:
  bool indep_impl(const Subset& s) const override {
    for (const auto& m : members_)
      if (!m->is_independent(s)) return false;
    return true;
  }

 private:
  std::vector<std::shared_ptr<const IndependenceOracle>> members_;
};

/// Integer knapsack: feasible iff the total size fits the budget. Sizes are
/// positive, so the family is downward closed.
class KnapsackConstraint : public IndependenceOracle {
 public:
  KnapsackConstraint(std::vector<std::int64_t> sizes, std::int64_t budget)
      : IndependenceOracle(static_cast<int>(sizes.size())),
        sizes_(std::move(sizes)),
        budget_(budget) {
    for (auto c : sizes_)
      if (c <= 0) throw InvalidParameter("KnapsackConstraint: sizes must be positive");
    if (budget_ < 0)
      throw InvalidParameter("KnapsackConstraint: budget must be >= 0");
  }

  const std::vector<std::int64_t>& sizes() const { return sizes_; }
  std::int64_t budget() const { return budget_; }
  std::int64_t size_of(const Subset& s) const {
    std::int64_t total = 0;
    for (int e : s) total += sizes_[static_cast<std::size_t>(e)];
    return total;
  }

 protected:
  bool indep_impl(const Subset& s) const override {
    return size_of(s) <= budget_;
  }

 private:
  std::vector<std::int64_t> sizes_;
  std::int64_t budget_;
};

}  // namespace submax
