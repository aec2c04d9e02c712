#pragma once

#include <cstdint>
#include <vector>

namespace submax {

/// Deterministic pseudo-random stream used everywhere randomness is needed.
///
/// The generator is SplitMix64 (Steele, Lea & Flood; the reference constants
/// below are the published ones), chosen so that every draw is bit-exact
/// across platforms and compilers. All derived quantities are defined in
/// terms of the raw 64-bit stream:
///
///   next_u64():    z = (state += 0x9E3779B97F4A7C15)
///                  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///                  z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///                  return z ^ (z >> 31)
///   next_double(): next_u64() >> 11, scaled by 2^-53  -> uniform in [0, 1)
///   uniform_int(b): rejection below 2^64 - 2^64 mod b, then modulo b
///   bernoulli(p):  next_double() < p
///   binomial(n,p): inversion sampling -- one next_double(), then walk the
///                  CDF via the pmf recurrence
///   permutation(n): Fisher-Yates, swapping position i with
///                  i + uniform_int(n - i) for i = 0..n-2
///
/// Child streams are derived with child(tag): a fresh Rng seeded with the
/// SplitMix64 output of (seed ^ tag) so that (seed, trial index) pairs give
/// independent, reproducible streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t x = next_u64();
      if (x >= limit) return x % bound;
    }
  }

  bool bernoulli(double p) { return next_double() < p; }

  /// Binomial(n, p) by CDF inversion: consumes exactly one next_double().
  int binomial(int n, double p) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    const double u = next_double();
    const double odds = p / (1.0 - p);
    double pmf = 1.0;
    for (int i = 0; i < n; ++i) pmf *= (1.0 - p);
    double cdf = pmf;
    int k = 0;
    while (u >= cdf && k < n) {
      pmf *= odds * static_cast<double>(n - k) / static_cast<double>(k + 1);
      cdf += pmf;
      ++k;
    }
    return k;
  }

  /// Uniform random permutation of 0..n-1.
  std::vector<int> permutation(int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i + 1 < n; ++i) {
      int j = i + static_cast<int>(uniform_int(static_cast<std::uint64_t>(n - i)));
      std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(j)]);
    }
    return out;
  }

  /// Independent derived stream for (this seed, tag).
  Rng child(std::uint64_t tag) const {
    Rng mixer(state_ ^ (tag * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull));
    return Rng(mixer.next_u64());
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace submax
