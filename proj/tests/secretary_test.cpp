#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "submax/brute_force.hpp"
#include "submax/generators.hpp"
#include "submax/monte_carlo.hpp"
#include "submax/rank.hpp"
#include "submax/secretary.hpp"
#include "submax/secretary_matroid.hpp"
#include "submax/secretary_partition.hpp"
#include "test_util.hpp"

using namespace submax;

namespace {

constexpr double kTol = 1e-9;
const double kE = std::exp(1.0);

// wraps a policy run and asserts irrevocability plus a per-step feasibility
// predicate after every arrival
template <typename Policy, typename Feasible>
Subset run_checked(Policy& policy, const Stream& stream, Feasible feasible) {
  Subset previous;
  for (int e : stream.order) {
    policy.observe(e);
    const Subset& now = policy.selected();
    REQUIRE(set_difference(previous, now).empty());  // only grows
    REQUIRE(feasible(now));
    previous = now;
  }
  return previous;
}

std::unique_ptr<ValueOracle> coverage_minus_cost_instance(int n,
                                                          std::uint64_t seed) {
  Rng rng(seed);
  Instance inst;
  inst.n = n;
  inst.function = generate_coverage_minus_cost(n, n + 4, 0.3, rng);
  return inst.make_oracle();
}

}  // namespace

TEST_CASE("dynkin rule") {
  SECTION("n = 1 selects the single element") {
    const ModularFunction f({2.0});
    Rng rng(1);
    const Stream stream = Stream::uniform(1, rng);
    const auto pick = dynkin(stream, [&](int e) { return f.evaluate({e}); });
    REQUIRE(pick.has_value());
    CHECK(*pick == 0);
  }

  SECTION("selects the maximum with probability at least 1/e") {
    const int n = 20;
    std::vector<double> values;
    for (int i = 0; i < n; ++i) values.push_back(static_cast<double>(i + 1));
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          const Stream stream = Stream::uniform(n, rng);
          const auto pick = dynkin(
              stream, [&](int e) { return values[static_cast<std::size_t>(e)]; });
          return (pick && *pick == n - 1) ? 1.0 : 0.0;
        },
        100000, 2024);
    CHECK(mc.mean >= 1.0 / kE - 3.0 * mc.stderr_of_mean);
  }

  SECTION("all-equal values never trigger once the sample is non-empty") {
    const int n = 10;  // sample size floor(10/e) = 3
    REQUIRE(dynkin_sample_size(n) >= 1);
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const Stream stream = Stream::uniform(n, rng);
      const auto pick = dynkin(stream, [](int) { return 1.0; });
      CHECK_FALSE(pick.has_value());
    }
  }
}

TEST_CASE("threshold_online") {
  SECTION("tau = 0 with modular f accepts the first k arrivals") {
    const ModularFunction f({1.0, 2.0, 3.0, 4.0, 5.0});
    const Stream stream = Stream::from_order({4, 2, 0, 1, 3});
    CHECK(threshold_online(f, stream, 0.0, 3) == Subset{0, 2, 4});
  }

  SECTION("tau above every singleton value returns empty, and the lemma holds") {
    const auto f = coverage_minus_cost_instance(8, 11);
    double max_single = 0.0;
    for (int e = 0; e < 8; ++e)
      max_single = std::max(max_single, f->evaluate({e}));
    const double tau = max_single + 1.0;
    Rng rng(3);
    const Stream stream = Stream::uniform(8, rng);
    const Subset s = threshold_online(*f, stream, tau, 3);
    CHECK(s.empty());
    const auto table = value_table(*f);
    for (std::uint64_t c = 0; c < table.size(); ++c) {
      if (std::popcount(c) > 3) continue;
      CHECK(0.0 >= table[c] - static_cast<double>(std::popcount(c)) * tau - kTol);
    }
  }

  SECTION("gadget, k=2, tau=0.3: disjunction over all 6 orders") {
    const CoverGadget g({1, 2}, {2});
    Subset order = {0, 1, 2};
    do {
      const Subset s =
          threshold_online(g, Stream::from_order({order[0], order[1], order[2]}),
                           0.3, 2);
      for (std::uint64_t c = 0; c < 8; ++c) {
        if (std::popcount(c) > 2) continue;
        CHECK(test::threshold_lemma_holds(g, s, subset_from_mask(c), 0.3, 2));
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }

  SECTION("lemma disjunction across all n! orders, all feasible C*") {
    const auto f = coverage_minus_cost_instance(6, 13);
    for (const double tau : {0.0, 0.4, 1.0, 2.5}) {
      for (const int k : {2, 3}) {
        Subset order = full_set(6);
        do {
          const Subset s = threshold_online(*f, Stream::from_order(order), tau, k);
          for (std::uint64_t c = 0; c < 64; ++c) {
            if (std::popcount(c) > k) continue;
            REQUIRE(test::threshold_lemma_holds(*f, s, subset_from_mask(c), tau, k));
          }
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  }
}

TEST_CASE("advice_online_cardinality") {
  SECTION("Z = 0 and branch S1 accepts the first k elements") {
    const ModularFunction f({1.0, 1.0, 1.0, 1.0});
    Rng rng(5);
    AdviceCardinalityPolicy policy(f, 2, 0.0, rng,
                                   AdviceCardinalityPolicy::Branch::s1);
    const Subset out = run_policy(policy, Stream::from_order({3, 1, 0, 2}));
    CHECK(out == Subset{1, 3});
  }

  SECTION("selected set stays within k and grows irrevocably") {
    const auto f = coverage_minus_cost_instance(9, 17);
    const auto opt = brute_force_opt_cardinality(*f, 3);
    Rng rng(29);
    for (int trial = 0; trial < 50; ++trial) {
      Rng trial_rng = rng.child(static_cast<std::uint64_t>(trial));
      const Stream stream = Stream::uniform(9, trial_rng);
      AdviceCardinalityPolicy policy(*f, 3, opt.opt_value, trial_rng);
      run_checked(policy, stream, [](const Subset& s) { return s.size() <= 3; });
      CHECK(policy.s1_prime().size() <= policy.s1().size());
      CHECK(set_difference(policy.s1_prime(), policy.s1()).empty());
      CHECK(set_intersection(policy.s1(), policy.s2()).empty());
    }
  }

  SECTION("gadget: Monte Carlo mean meets OPT/21") {
    const CoverGadget g({1, 2}, {2});
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          const Stream stream = Stream::uniform(3, rng);
          return g.evaluate(advice_online_cardinality(g, stream, 2, 3.0, rng));
        },
        20000, 37);
    CHECK(mc.mean >= 3.0 / 21.0 - 3.0 * mc.stderr_of_mean);
    CHECK(mc.mean <= 3.0 + kTol);  // sandwich: never above OPT
  }

  SECTION("corpus instances meet OPT/21 with Z = OPT") {
    for (std::uint64_t seed : {41ull, 43ull}) {
      const auto f = coverage_minus_cost_instance(8, seed);
      const auto opt = brute_force_opt_cardinality(*f, 3);
      const auto mc = monte_carlo_eval(
          [&](Rng& rng) {
            const Stream stream = Stream::uniform(8, rng);
            return f->evaluate(
                advice_online_cardinality(*f, stream, 3, opt.opt_value, rng));
          },
          20000, seed);
      CHECK(mc.mean >= opt.opt_value / 21.0 - 3.0 * mc.stderr_of_mean);
    }
  }
}

TEST_CASE("submodular_secretaries") {
  SECTION("n = 1: heads always returns the element; mean clears half") {
    const ModularFunction f({5.0});
    int heads_hits = 0, heads_total = 0;
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          const Stream stream = Stream::uniform(1, rng);
          CardinalitySecretaryPolicy policy(f, 1, 1, FmvBackend::exact(), rng);
          const Subset out = run_policy(policy, stream);
          if (policy.heads()) {
            ++heads_total;
            heads_hits += out == Subset{0} ? 1 : 0;
          }
          return f.evaluate(out);
        },
        4000, 47);
    CHECK(heads_total > 0);
    CHECK(heads_hits == heads_total);  // heads branch always takes it
    CHECK(mc.mean >= 0.5 * 5.0 - 3.0 * mc.stderr_of_mean);
  }

  SECTION("corpus: mean clears OPT/1417 by a wide margin") {
    const auto f = coverage_minus_cost_instance(9, 53);
    const auto opt = brute_force_opt_cardinality(*f, 3);
    REQUIRE(opt.opt_value > 0.0);
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          const Stream stream = Stream::uniform(9, rng);
          return f->evaluate(
              submodular_secretaries(*f, stream, 3, FmvBackend::exact(), rng));
        },
        20000, 59);
    CHECK(mc.mean >= opt.opt_value / 1417.0);
    CHECK(mc.mean >= 10.0 * opt.opt_value / 1417.0);  // wide-margin sanity
  }

  SECTION("forced heads branch achieves Dynkin's singleton guarantee") {
    const ModularFunction f({1.0, 3.0, 7.0, 2.0, 5.0, 4.0, 6.0, 0.5});
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          const Stream stream = Stream::uniform(8, rng);
          CardinalitySecretaryPolicy policy(f, 8, 2, FmvBackend::exact(), rng,
                                            /*force_heads=*/true);
          return f.evaluate(run_policy(policy, stream));
        },
        50000, 61);
    CHECK(mc.mean >= 7.0 / kE - 3.0 * mc.stderr_of_mean);
  }
}

TEST_CASE("partition contiguous secretary") {
  const PartitionMatroid part({{0, 1, 2}, {3, 4, 5}, {6, 7}});

  SECTION("non-contiguous stream raises ContractViolation") {
    const ModularFunction f(std::vector<double>(8, 1.0));
    Rng rng(67);
    PartitionContiguousPolicy policy(f, part, rng);
    CHECK_THROWS_AS(
        run_policy(policy, Stream::from_order({0, 3, 1, 2, 4, 5, 6, 7})),
        ContractViolation);
  }

  SECTION("mode A: at most one element per group, always feasible") {
    const auto f = coverage_minus_cost_instance(8, 71);
    Rng rng(73);
    for (int trial = 0; trial < 40; ++trial) {
      Rng trial_rng = rng.child(static_cast<std::uint64_t>(trial));
      const Stream stream = contiguous_stream(part, trial_rng);
      PartitionContiguousPolicy policy(*f, part, trial_rng, PartitionMode::a);
      run_checked(policy, stream,
                  [&](const Subset& s) { return part.is_independent(s); });
    }
  }

  SECTION("single group and modular f reduces to a coin-gated Dynkin") {
    const PartitionMatroid single({{0, 1, 2, 3, 4}});
    const ModularFunction f({1.0, 5.0, 3.0, 2.0, 4.0});
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          const Stream stream = contiguous_stream(single, rng);
          return f.evaluate(
              partition_contiguous_secretary(f, single, stream, rng));
        },
        50000, 79);
    // modes A and B select on heads (B keeps half), C on tails; Dynkin gets
    // the max with probability ~0.43 at n=5, so the mean is well above
    // (1/2)(1/e)(max)(2/3 + 1/3*1/2) ... just check the proven floor
    CHECK(mc.mean >= 5.0 / (3.0 + 6.0 * kE) - 3.0 * mc.stderr_of_mean);
  }

  SECTION("corpus: mean meets OPT/(3+6e)") {
    const auto f = coverage_minus_cost_instance(8, 83);
    const auto opt = brute_force_opt_partition(*f, part);
    REQUIRE(opt.opt_value > 0.0);
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          const Stream stream = contiguous_stream(part, rng);
          return f->evaluate(
              partition_contiguous_secretary(*f, part, stream, rng));
        },
        20000, 89);
    CHECK(mc.mean >= opt.opt_value / (3.0 + 6.0 * kE) - 3.0 * mc.stderr_of_mean);
  }

  SECTION("coupled A/C runs select disjoint sets") {
    // test-only coupled executor: both modes run per group with their own
    // frozen valuations; when both Dynkin picks coincide one shared coin
    // decides the winner, otherwise each mode flips its own coin
    const auto f = coverage_minus_cost_instance(8, 97);
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
      Rng trial_rng = rng.child(static_cast<std::uint64_t>(trial));
      const Stream stream = contiguous_stream(part, trial_rng);
      Subset run_a, run_c;
      std::size_t pos = 0;
      while (pos < stream.order.size()) {
        const int group = part.group_of(stream.order[pos]);
        std::vector<int> block;
        while (pos < stream.order.size() &&
               part.group_of(stream.order[pos]) == group)
          block.push_back(stream.order[pos++]);
        DynkinTracker tracker_a(static_cast<int>(block.size()));
        DynkinTracker tracker_c(static_cast<int>(block.size()));
        const double base_a = f->evaluate(run_a);
        const double base_c = f->evaluate(run_c);
        int pick_a = -1, pick_c = -1;
        for (int e : block) {
          if (pick_a < 0 &&
              tracker_a.feed(marginal_given(*f, run_a, base_a, e)))
            pick_a = e;
          if (pick_c < 0 &&
              tracker_c.feed(marginal_given(*f, run_c, base_c, e)))
            pick_c = e;
        }
        if (pick_a >= 0 && pick_a == pick_c) {
          if (trial_rng.bernoulli(0.5))
            run_a = with_element(run_a, pick_a);
          else
            run_c = with_element(run_c, pick_c);
        } else {
          if (pick_a >= 0 && trial_rng.bernoulli(0.5))
            run_a = with_element(run_a, pick_a);
          if (pick_c >= 0 && !trial_rng.bernoulli(0.5))
            run_c = with_element(run_c, pick_c);
        }
      }
      CHECK(set_intersection(run_a, run_c).empty());
      CHECK(part.is_independent(run_a));
      CHECK(part.is_independent(run_c));
    }
  }
}

TEST_CASE("partition general secretary") {
  SECTION("epoch schedules are consecutive and disjoint") {
    Rng rng(103);
    for (int trial = 0; trial < 50; ++trial) {
      Rng trial_rng = rng.child(static_cast<std::uint64_t>(trial));
      const EpochSchedule s = EpochSchedule::draw(40, 4, trial_rng);
      CHECK(s.boundaries.front() == s.sample_count);
      for (std::size_t j = 0; j + 1 < s.boundaries.size(); ++j)
        CHECK(s.boundaries[j + 1] ==
              s.boundaries[j] + s.epoch_lengths[j]);
      for (int pos = 0; pos < 40; ++pos) {
        const int epoch = s.epoch_of(pos);
        if (epoch == -1) CHECK(pos < s.sample_count);
      }
    }
  }

  SECTION("when the sample swallows the whole stream nothing is selected") {
    const ModularFunction f(std::vector<double>(4, 1.0));
    const PartitionMatroid part({{0, 1}, {2, 3}});
    Rng rng(107);
    int degenerate = 0;
    for (int trial = 0; trial < 300; ++trial) {
      Rng trial_rng = rng.child(static_cast<std::uint64_t>(trial));
      const Stream stream = Stream::uniform(4, trial_rng);
      PartitionGeneralPolicy policy(f, part, trial_rng);
      const Subset out = run_policy(policy, stream);
      if (policy.schedule().sample_count >= 4) {
        ++degenerate;
        CHECK(out.empty());
      }
    }
    CHECK(degenerate > 0);  // Binomial(4, 1/2) hits 4 reasonably often
  }

  SECTION("feasible and irrevocable on a corpus instance") {
    const auto f = coverage_minus_cost_instance(10, 109);
    Rng prng(113);
    const PartitionMatroid part(generate_partition(10, 3, prng).groups);
    Rng rng(127);
    for (int trial = 0; trial < 40; ++trial) {
      Rng trial_rng = rng.child(static_cast<std::uint64_t>(trial));
      const Stream stream = Stream::uniform(10, trial_rng);
      PartitionGeneralPolicy policy(*f, part, trial_rng);
      run_checked(policy, stream,
                  [&](const Subset& s) { return part.is_independent(s); });
    }
  }

  SECTION("single group: one coin-gated threshold pick at most") {
    // epoch lengths are Binomial(n, 1/100k), so selections need n >> 1
    const int n = 50;
    std::vector<double> weights;
    for (int i = 0; i < n; ++i) weights.push_back(static_cast<double>(i));
    const ModularFunction f(weights);
    std::vector<std::vector<int>> groups = {{}};
    for (int i = 0; i < n; ++i) groups[0].push_back(i);
    const PartitionMatroid single(groups);
    Rng rng(167);
    int selected_something = 0;
    for (int trial = 0; trial < 4000; ++trial) {
      Rng trial_rng = rng.child(static_cast<std::uint64_t>(trial));
      const Stream stream = Stream::uniform(n, trial_rng);
      PartitionGeneralPolicy policy(f, single, trial_rng);
      const Subset out = run_policy(policy, stream);
      CHECK(out.size() <= 1);
      // the run set never exceeds one element either (group blocks itself)
      CHECK(policy.run_set().size() <= 1);
      selected_something += out.empty() ? 0 : 1;
    }
    CHECK(selected_something > 0);
  }

  SECTION("positive expected value on an easy instance") {
    const ModularFunction f({4.0, 1.0, 3.0, 2.0, 5.0, 1.0});
    const PartitionMatroid part({{0, 1, 2}, {3, 4, 5}});
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          const Stream stream = Stream::uniform(6, rng);
          return f.evaluate(partition_general_secretary(f, part, stream, rng));
        },
        30000, 131);
    const auto opt = brute_force_opt_partition(f, part);
    CHECK(mc.mean > 0.0);
    CHECK(mc.mean <= opt.opt_value);
    WARN("partition-general measured ratio: " << mc.mean / opt.opt_value);
  }
}

TEST_CASE("matroid threshold and secretary") {
  SECTION("tau = 0 lets S1 grow to a basis") {
    const ModularFunction f({1.0, 2.0, 3.0, 4.0, 5.0});
    const PartitionMatroid sys({{0, 1}, {2, 3}, {4}});
    Rng rng(137);
    const auto result =
        matroid_threshold_offline(f, {0, 1, 2, 3, 4}, sys, 0.0, 0.4, rng);
    CHECK(result.s1.size() == 3);  // one per group
    for (int e = 0; e < 5; ++e)
      if (!contains(result.s1, e))
        CHECK_FALSE(sys.is_independent(with_element(result.s1, e)));
  }

  SECTION("uniform matroid, modular f, tau = max: buckets only max elements") {
    const ModularFunction f({1.0, 5.0, 5.0, 2.0, 5.0});
    const UniformMatroid sys(5, 2);
    Rng rng(139);
    const auto result =
        matroid_threshold_offline(f, {0, 1, 2, 3, 4}, sys, 5.0, 1.0, rng);
    for (int e : set_union(result.s1, result.s2))
      CHECK(f.evaluate({e}) == 5.0);
  }

  SECTION("expected value clears |C*_tau| tau / 10 on corpus matroids") {
    const auto f = coverage_minus_cost_instance(9, 149);
    std::vector<std::shared_ptr<const IndependenceOracle>> systems = {
        std::make_shared<UniformMatroid>(9, 3),
        std::make_shared<PartitionMatroid>(
            std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}),
    };
    Rng rng(151);
    for (const auto& sys : systems) {
      const auto opt = brute_force_opt_constrained(*f, *sys, 14);
      for (const double tau_frac : {0.25, 0.5, 1.0}) {
        double w1 = 0.0;
        for (int e = 0; e < 9; ++e) w1 = std::max(w1, f->evaluate({e}));
        const double tau = tau_frac * w1;
        const int c_tau = test::tau_filtered_count(*f, opt.opt_set, tau);
        for (int trial = 0; trial < 20; ++trial) {
          Rng trial_rng = rng.child(static_cast<std::uint64_t>(trial));
          const Stream stream = Stream::uniform(9, trial_rng);
          const auto result = matroid_threshold_offline(
              *f, stream.order, *sys, tau, 0.4, trial_rng);
          // expectation over the final coin is the bucket average, exactly
          const double expected = 0.5 * (f->evaluate(result.s1) +
                                         f->evaluate(result.s2));
          CHECK(expected >= static_cast<double>(c_tau) * tau / 10.0 - kTol);
        }
      }
    }
  }

  SECTION("tau grid: strictly decreasing, pinned length, sum lemma") {
    for (int k : {2, 4, 8}) {
      const TauGrid grid = TauGrid::from_w1(8.0, k);
      CHECK(grid.grid.size() ==
            static_cast<std::size_t>(1 + ceil_log2(2 * k)));
      for (std::size_t i = 0; i + 1 < grid.grid.size(); ++i)
        CHECK(grid.grid[i] > grid.grid[i + 1]);
    }
    // sum lemma on brute-force optima
    const auto f = coverage_minus_cost_instance(9, 157);
    for (int k : {2, 3, 4}) {
      const auto opt = brute_force_opt_cardinality(*f, k);
      double w1 = 0.0;
      for (int e = 0; e < 9; ++e) w1 = std::max(w1, f->evaluate({e}));
      const TauGrid grid = TauGrid::from_w1(w1, k);
      double sum = 0.0;
      for (const double tau : grid.grid)
        sum += static_cast<double>(
                   test::tau_filtered_count(*f, opt.opt_set, tau)) * tau;
      CHECK(sum >= opt.opt_value / 4.0 - kTol);
    }
  }

  SECTION("advice variant meets OPT/(40(1+log2 2k))") {
    const auto f = coverage_minus_cost_instance(9, 163);
    const UniformMatroid sys(9, 4);
    const auto opt = brute_force_opt_constrained(*f, sys, 14);
    double w1 = 0.0;
    for (int e = 0; e < 9; ++e) w1 = std::max(w1, f->evaluate({e}));
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          const Stream stream = Stream::uniform(9, rng);
          MatroidAdvicePolicy policy(*f, sys, 4, w1, rng);
          return f->evaluate(run_policy(policy, stream));
        },
        20000, 167);
    const double bound =
        opt.opt_value / (40.0 * (1.0 + static_cast<double>(ceil_log2(8))));
    CHECK(mc.mean >= bound - 3.0 * mc.stderr_of_mean);
  }

  SECTION("rank-1 secretary on two elements: hand trace") {
    const ModularFunction f({1.0, 2.0});
    const UniformMatroid sys(2, 1);
    Rng rng(173);
    int exact_matches = 0, trials = 0;
    for (int trial = 0; trial < 500; ++trial) {
      Rng trial_rng = rng.child(static_cast<std::uint64_t>(trial));
      const Stream stream = Stream::uniform(2, trial_rng);
      MatroidSecretaryPolicy policy(f, sys, 2, 1, trial_rng);
      const Subset out = run_policy(policy, stream);
      CHECK(out.size() <= 1);
      ++trials;
      exact_matches += out.empty() ? 0 : 1;
    }
    CHECK(exact_matches > 0);
    CHECK(trials == 500);
  }

  SECTION("k < 1 rejected") {
    const ModularFunction f({1.0});
    const UniformMatroid sys(1, 1);
    Rng rng(1);
    CHECK_THROWS_AS(MatroidSecretaryPolicy(f, sys, 1, 0, rng), InvalidParameter);
    CHECK_THROWS_AS(TauGrid::from_w1(1.0, 0), InvalidParameter);
  }

  SECTION("scaling: normalized means stay within a loose band across k") {
    std::map<int, double> normalized;
    for (int k : {2, 4, 8}) {
      Rng gen(static_cast<std::uint64_t>(200 + k));
      Instance inst;
      inst.n = 12;
      inst.function = generate_coverage(12, 16, 0.3, gen);
      const auto f = inst.make_oracle();
      const UniformMatroid sys(12, k);
      const auto opt = brute_force_opt_constrained(*f, sys, 14);
      const auto mc = monte_carlo_eval(
          [&](Rng& rng) {
            const Stream stream = Stream::uniform(12, rng);
            return f->evaluate(matroid_secretary(*f, sys, stream, k, rng));
          },
          20000, static_cast<std::uint64_t>(300 + k));
      normalized[k] =
          mc.mean * (1.0 + static_cast<double>(ceil_log2(2 * k))) /
          opt.opt_value;
      CHECK(mc.mean > 0.0);
    }
    const double lo = std::min({normalized[2], normalized[4], normalized[8]});
    const double hi = std::max({normalized[2], normalized[4], normalized[8]});
    CHECK(hi / lo < 10.0);
  }
}

TEST_CASE("monte_carlo_eval") {
  SECTION("deterministic trial gives zero stderr") {
    const auto mc = monte_carlo_eval([](Rng&) { return 2.5; }, 100, 1);
    CHECK(mc.mean == 2.5);
    CHECK(mc.stderr_of_mean == 0.0);
  }

  SECTION("same seed reproduces per-trial values") {
    auto trial = [](Rng& rng) { return rng.next_double(); };
    const auto a = monte_carlo_eval(trial, 50, 9);
    const auto b = monte_carlo_eval(trial, 50, 9);
    CHECK(a.values == b.values);
    const auto c = monte_carlo_eval(trial, 50, 10);
    CHECK(a.values != c.values);
  }

  SECTION("trials >= 1 is required") {
    CHECK_THROWS_AS(monte_carlo_eval([](Rng&) { return 0.0; }, 0, 1),
                    InvalidParameter);
  }
}

TEST_CASE("stream permutations are uniform (chi-square)") {
  const int n = 4;
  const int samples = 200000;
  std::map<std::vector<int>, int> counts;
  Rng rng(2027);
  for (int i = 0; i < samples; ++i) counts[rng.permutation(n)]++;
  REQUIRE(counts.size() == 24);
  const double expected = samples / 24.0;
  double chi2 = 0.0;
  for (const auto& [perm, count] : counts) {
    const double d = count - expected;
    chi2 += d * d / expected;
  }
  // 23 degrees of freedom; 49.7 is the 0.1% critical value
  CHECK(chi2 < 49.7);
}
