#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "submax/functions.hpp"
#include "submax/generators.hpp"
#include "submax/monte_carlo.hpp"
#include "submax/unconstrained.hpp"

using namespace submax;

namespace {

// independent enumeration of max over subsets of s (second implementation)
double naive_best_subset(const ValueOracle& f, const Subset& s) {
  double best = 0.0;
  const int m = static_cast<int>(s.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Subset t;
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) t.push_back(s[static_cast<std::size_t>(i)]);
    best = std::max(best, f.evaluate(t));
  }
  return best;
}

CutFunction complete_graph_k4() {
  std::vector<std::tuple<int, int, double>> edges;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) edges.push_back({u, v, 1.0});
  return CutFunction(4, edges);
}

std::vector<std::unique_ptr<ValueOracle>> small_corpus() {
  std::vector<std::unique_ptr<ValueOracle>> corpus;
  Rng rng(99);
  for (int i = 0; i < 4; ++i) {
    Instance inst;
    inst.n = 8 + i;
    Rng gen = rng.child(static_cast<std::uint64_t>(i));
    inst.function = generate_coverage_minus_cost(inst.n, 12, 0.3, gen);
    corpus.push_back(inst.make_oracle());
  }
  for (int i = 0; i < 3; ++i) {
    Instance inst;
    inst.n = 7 + i;
    Rng gen = rng.child(static_cast<std::uint64_t>(100 + i));
    inst.function = generate_cut(inst.n, 0.5, gen);
    corpus.push_back(inst.make_oracle());
  }
  return corpus;
}

}  // namespace

TEST_CASE("fmv_random_subset basics") {
  const CutFunction f = complete_graph_k4();
  Rng rng(1);
  CHECK(fmv_random_subset(f, {}, rng).empty());

  SECTION("fixed seed replays the same coin flips") {
    const Subset s = {0, 1, 2, 3};
    Rng a(42);
    const Subset first = fmv_random_subset(f, s, a);
    // replay the seeded RNG independently: the i-th coin keeps s[i]
    Rng b(42);
    Subset expected;
    for (int e : s)
      if (b.next_double() < 0.5) expected.push_back(e);
    CHECK(first == expected);
    Rng c(42);
    CHECK(fmv_random_subset(f, s, c) == first);
  }

  SECTION("Monte Carlo quarter bound on K4") {
    // brute-force max cut of unit K4 is 4
    const double opt = naive_best_subset(f, {0, 1, 2, 3});
    REQUIRE(opt == 4.0);
    const auto mc = monte_carlo_eval(
        [&](Rng& rng) {
          return f.evaluate(fmv_random_subset(f, {0, 1, 2, 3}, rng));
        },
        100000, 7);
    CHECK(mc.mean >= opt / 4.0 - 3.0 * mc.stderr_of_mean);
  }
}

TEST_CASE("fmv_local_search basics") {
  SECTION("single positive element") {
    const ModularFunction f({0.0, 5.0, 0.0});
    CHECK(fmv_local_search(f, {1}) == Subset{1});
  }
  SECTION("empty input") {
    const ModularFunction f({1.0});
    CHECK(fmv_local_search(f, {}).empty());
  }
  SECTION("4-cycle cut reaches at least a third of the maximum") {
    const CutFunction f(
        4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}});
    const Subset out = fmv_local_search(f, {0, 1, 2, 3});
    CHECK(f.evaluate(out) >= 4.0 / 3.0);
  }
}

TEST_CASE("fmv_exact") {
  const CoverGadget g({1, 2}, {2});
  SECTION("finds the gadget optimum") {
    const Subset best = fmv_exact(g, {0, 1, 2});
    CHECK(best == Subset{0, 2});  // {1_B, 2_TB}
    CHECK(g.evaluate(best) == 3.0);
  }
  SECTION("empty input") { CHECK(fmv_exact(g, {}).empty()); }
  SECTION("matches an independent enumeration on random instances") {
    Rng rng(5);
    for (int i = 0; i < 5; ++i) {
      Instance inst;
      inst.n = 9;
      Rng gen = rng.child(static_cast<std::uint64_t>(i));
      inst.function = generate_coverage_minus_cost(9, 12, 0.3, gen);
      const auto f = inst.make_oracle();
      const Subset s = full_set(9);
      CHECK(f->evaluate(fmv_exact(*f, s)) == naive_best_subset(*f, s));
    }
  }
  SECTION("cap enforced") {
    const ModularFunction f(std::vector<double>(25, 1.0));
    CHECK_THROWS_AS(fmv_exact(f, full_set(25), 20), CapExceeded);
  }
}

TEST_CASE("backend contracts on a corpus") {
  const auto corpus = small_corpus();
  for (const auto& f : corpus) {
    const Subset s = full_set(f->ground_size());
    const double opt = naive_best_subset(*f, s);
    const Subset exact = fmv_exact(*f, s);
    const double exact_value = f->evaluate(exact);

    // all backends return subsets of S; exact dominates the others
    CHECK(exact_value == opt);
    const Subset local = fmv_local_search(*f, s);
    CHECK(set_difference(local, s).empty());
    CHECK(f->evaluate(local) <= exact_value);
    CHECK(f->evaluate(local) >= opt / 3.05 - 1e-9);

    Rng rng(13);
    const Subset random = fmv_random_subset(*f, s, rng);
    CHECK(set_difference(random, s).empty());
    CHECK(f->evaluate(random) <= exact_value);

    const auto mc = monte_carlo_eval(
        [&](Rng& trial_rng) {
          return f->evaluate(fmv_random_subset(*f, s, trial_rng));
        },
        100000, 21);
    CHECK(mc.mean >= opt / 4.0 - 3.0 * mc.stderr_of_mean);
  }
}

TEST_CASE("backend dispatch") {
  const CoverGadget g({1, 2}, {2});
  Rng rng(3);
  CHECK(FmvBackend::exact().run(g, {0, 1, 2}, rng) == Subset{0, 2});
  CHECK(FmvBackend::exact().alpha() == 1.0);
  CHECK(FmvBackend::local().alpha() == 3.0);
  CHECK(FmvBackend::random().alpha() == 4.0);
  CHECK(fmv_backend_from_name("local").kind == FmvBackend::Kind::local_search);
  CHECK_THROWS_AS(fmv_backend_from_name("nope"), InvalidConfig);
}
