#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "submax/errors.hpp"
#include "submax/rng.hpp"

namespace submax {

struct MonteCarloResult {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  std::vector<double> values;

  int trials() const { return static_cast<int>(values.size()); }
};

/// Runs `trials` independent trials. Each trial t gets its own derived
/// stream Rng(seed).child(t), so results are a deterministic function of
/// (seed, trials) and trials could equally be evaluated concurrently; the
/// aggregation is a fold in trial order.
inline MonteCarloResult monte_carlo_eval(
    const std::function<double(Rng&)>& trial, int trials, std::uint64_t seed) {
  if (trials < 1)
    throw InvalidParameter("monte_carlo_eval: trials must be >= 1");
  MonteCarloResult result;
  result.values.reserve(static_cast<std::size_t>(trials));
  const Rng root(seed);
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.child(static_cast<std::uint64_t>(t));
    const double v = trial(rng);
    result.values.push_back(v);
    sum += v;
  }
  result.mean = sum / trials;
  if (trials > 1) {
    double ss = 0.0;
    for (double v : result.values) {
      const double d = v - result.mean;
      ss += d * d;
    }
    result.stderr_of_mean =
        std::sqrt(ss / (trials - 1)) / std::sqrt(static_cast<double>(trials));
  }
  return result;
}

}  // namespace submax
