#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

/// A subset of the ground set {0, ..., n-1} in canonical form: a strictly
/// ascending list of element indices. All public interfaces exchange
/// subsets in this form; a packed 64-bit mask view is used internally for
/// exhaustive enumeration (n <= 64 only).
using Subset = std::vector<int>;

/// Ground set descriptor: element count plus optional display labels.
struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;  // empty, or exactly n entries

  std::string label(int e) const {
    if (!labels.empty()) return labels[static_cast<std::size_t>(e)];
    return std::to_string(e);
  }
};

inline bool is_canonical(const Subset& s, int n) {
  int prev = -1;
  for (int e : s) {
    if (e <= prev || e < 0 || e >= n) return false;
    prev = e;
  }
  return true;
}

inline void require_canonical(const Subset& s, int n, const char* where) {
  if (!is_canonical(s, n)) {
    throw InvalidSubset(std::string(where) +
                        ": subset must be strictly ascending indices in [0, " +
                        std::to_string(n) + ")");
  }
}

inline bool contains(const Subset& s, int e) {
  return std::binary_search(s.begin(), s.end(), e);
}

/// S + e. Precondition: e not in S.
inline Subset with_element(const Subset& s, int e) {
  Subset out;
  out.reserve(s.size() + 1);
  auto it = std::lower_bound(s.begin(), s.end(), e);
  out.insert(out.end(), s.begin(), it);
  out.push_back(e);
  out.insert(out.end(), it, s.end());
  return out;
}

/// S - e (no-op when e is absent).
inline Subset without_element(const Subset& s, int e) {
  Subset out;
  out.reserve(s.size());
  for (int x : s)
    if (x != e) out.push_back(x);
  return out;
}

inline Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline Subset set_difference(const Subset& a, const Subset& b) {
  Subset out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline Subset set_intersection(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline Subset full_set(int n) {
  Subset out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

inline Subset subset_from_mask(std::uint64_t mask) {
  Subset out;
  while (mask) {
    int e = std::countr_zero(mask);
    out.push_back(e);
    mask &= mask - 1;
  }
  return out;
}

inline std::uint64_t mask_from_subset(const Subset& s) {
  std::uint64_t mask = 0;
  for (int e : s) mask |= std::uint64_t{1} << e;
  return mask;
}

/// The tie order used by every deterministic argmax reduction: fewer
/// elements first, then lexicographic on the ascending index lists
/// (shortlex). The empty set is the minimum.
inline bool lex_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string to_string(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += "}";
  return out;
}

}  // namespace submax
