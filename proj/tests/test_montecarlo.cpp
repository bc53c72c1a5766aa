#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <unordered_set>

#include <upset/bounds.hpp>
#include <upset/montecarlo.hpp>
#include <upset/rng.hpp>

using namespace upset;

TEST_CASE("trial seeds are deterministic and spread out") {
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));

  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 100000; ++i)
    seen.insert(trial_seed(424242, i));
  CHECK(seen.size() == 100000);
}

TEST_CASE("xoshiro rejection sampling stays in range") {
  Xoshiro256StarStar rng(5);
  for (int i = 0; i < 10000; ++i) {
    CHECK(rng.next_below(7) < 7);
    CHECK(rng.next_below(1) == 0);
  }
}

TEST_CASE("sampled point sets have distinct coordinates in the lattice") {
  const PointSet set = sample_point_set(500, 99);
  CHECK(set.size() == 500);
  CHECK(set.lattice_bits == lattice_bits_default);
  CHECK(has_distinct_coordinates(set.points));
  for (const Point& p : set.points) {
    CHECK(p.x >= 0);
    CHECK(p.x < lattice_max);
    CHECK(p.y >= 0);
    CHECK(p.y < lattice_max);
  }

  const PointSet again = sample_point_set(500, 99);
  CHECK(again.points == set.points);
  const PointSet other = sample_point_set(500, 100);
  CHECK(other.points != set.points);

  CHECK_THROWS_AS(sample_point_set(0, 1), Error);
}

TEST_CASE("sampled permutations are valid and uniform-ish") {
  const Permutation p = sample_permutation(1000, 7);
  CHECK_NOTHROW(p.validate());
  CHECK(sample_permutation(1000, 7).values == p.values);
  CHECK(sample_permutation(1000, 8).values != p.values);

  // All 6 permutations of size 3 should appear roughly equally often.
  std::map<std::vector<int>, int> counts;
  for (std::uint64_t seed = 0; seed < 6000; ++seed)
    counts[sample_permutation(3, trial_seed(11, seed)).values] += 1;
  REQUIRE(counts.size() == 6);
  for (const auto& [values, count] : counts) {
    INFO(values[0] << values[1] << values[2] << " -> " << count);
    CHECK(count > 850);
    CHECK(count < 1150);
  }

  CHECK_THROWS_AS(sample_permutation(0, 1), Error);
}

TEST_CASE("wilson intervals") {
  const WilsonInterval empty = wilson_interval(0, 0);
  CHECK(empty.lo == 0.0);
  CHECK(empty.hi == 1.0);

  const WilsonInterval zero = wilson_interval(0, 1000);
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi > 0.0);
  CHECK(zero.hi < 0.01);

  const WilsonInterval full = wilson_interval(1000, 1000);
  CHECK(full.hi == 1.0);
  CHECK(full.lo > 0.99);

  const WilsonInterval mid = wilson_interval(80, 1000);
  CHECK(mid.lo < 0.08);
  CHECK(0.08 < mid.hi);
  CHECK(mid.lo > 0.05);
  CHECK(mid.hi < 0.11);

  // More data narrows the interval around the same rate.
  const WilsonInterval narrow = wilson_interval(8000, 100000);
  CHECK(narrow.lo > mid.lo);
  CHECK(narrow.hi < mid.hi);
}

TEST_CASE("run_trials is reproducible and worker independent") {
  TrialConfig cfg;
  cfg.m = 5;
  cfg.ell = 4;
  cfg.trials = 4000;
  cfg.master_seed = 2718;
  cfg.mode = SampleMode::POINTS;

  const McReport one = run_trials(cfg, 1);
  const McReport four = run_trials(cfg, 4);
  const McReport seven = run_trials(cfg, 7);
  CHECK(one.hits == four.hits);
  CHECK(one.hits == seven.hits);
  CHECK(one.hits > 0);
  CHECK(one.hits < one.trials);
  CHECK(one.trials == 4000);
  CHECK(one.empirical_p ==
        static_cast<double>(one.hits) / static_cast<double>(one.trials));
  CHECK(one.wilson95.lo <= one.empirical_p);
  CHECK(one.empirical_p <= one.wilson95.hi);
  CHECK_FALSE(one.vacuous);
  CHECK_FALSE(one.n.has_value());

  cfg.mode = SampleMode::PERMUTATION;
  const McReport perm_one = run_trials(cfg, 1);
  const McReport perm_three = run_trials(cfg, 3);
  CHECK(perm_one.hits == perm_three.hits);
}

TEST_CASE("run_trials matches the exact probability at m=4, ell=4") {
  TrialConfig cfg;
  cfg.m = 4;
  cfg.ell = 4;
  cfg.trials = 20000;
  cfg.master_seed = 31337;

  const McReport report = run_trials(cfg, 4);
  const double exact = 1.0 / 12.0;
  CHECK(report.union_bound_value == Catch::Approx(exact).epsilon(1e-12));
  CHECK(report.empirical_p == Catch::Approx(exact).margin(0.008));
  CHECK(report.wilson95.lo <= exact);
  CHECK(exact <= report.wilson95.hi);
}

TEST_CASE("claim bound appears exactly when the threshold is met") {
  TrialConfig cfg;
  cfg.m = 100;
  cfg.ell = 54;  // 2e sqrt(100) = 54.37
  cfg.trials = 10;
  cfg.master_seed = 5;
  CHECK_FALSE(run_trials(cfg).claim3_bound.has_value());

  cfg.ell = 55;
  const McReport met = run_trials(cfg);
  REQUIRE(met.claim3_bound.has_value());
  CHECK(*met.claim3_bound == std::ldexp(1.0, 1 - 2 * 55));

  cfg.m = 4;
  cfg.ell = 11;  // 2e sqrt(4) = 10.87
  const McReport small = run_trials(cfg);
  REQUIRE(small.claim3_bound.has_value());
  CHECK(*small.claim3_bound == std::ldexp(1.0, -21));
  CHECK(small.hits == 0);  // ell > m leaves no room for a monotone run
}

TEST_CASE("run_trials validates its configuration") {
  TrialConfig cfg;
  cfg.m = 0;
  CHECK_THROWS_AS(run_trials(cfg), Error);
  cfg.m = 2;
  cfg.ell = 0;
  CHECK_THROWS_AS(run_trials(cfg), Error);
  cfg.ell = 1;
  cfg.trials = 0;
  CHECK_THROWS_AS(run_trials(cfg), Error);
}

TEST_CASE("theorem experiment in the vacuous regime") {
  const McReport report = theorem1_experiment(24, 1000, 7);
  CHECK(report.vacuous);
  CHECK(report.trials == 0);
  CHECK(report.hits == 0);
  CHECK(report.config.m == 0);
  CHECK(report.config.ell == 2);
  CHECK(report.wilson95.lo == 0.0);
  CHECK(report.wilson95.hi == 1.0);
  CHECK(report.union_bound_value == 0.0);
  REQUIRE(report.certificate_rate.has_value());
  CHECK(*report.certificate_rate == 1.0);
  REQUIRE(report.n.has_value());
  CHECK(*report.n == 24);
  REQUIRE(report.tail.has_value());
  CHECK(*report.tail == 0.5);
}

TEST_CASE("theorem experiment just above the vacuous regime") {
  // n = 131 is the smallest n with m_max = 1; a single point can never hold
  // a monotone run of length 10.
  const McReport report = theorem1_experiment(131, 200, 3);
  CHECK_FALSE(report.vacuous);
  CHECK(report.config.m == 1);
  CHECK(report.config.ell == 10);
  CHECK(report.trials == 200);
  CHECK(report.hits == 0);
  REQUIRE(report.certificate_rate.has_value());
  CHECK(*report.certificate_rate == 1.0);
}

TEST_CASE("theorem experiment with an overridden point count") {
  const McReport report = theorem1_experiment(144, 300, 21, 2, 3);
  CHECK_FALSE(report.vacuous);
  CHECK(report.config.m == 3);
  CHECK(report.config.ell == 12);
  CHECK(report.hits == 0);  // 3 points cannot reach a run of 12
  CHECK(*report.certificate_rate == 1.0);

  CHECK_THROWS_AS(theorem1_experiment(11, 10, 1), Error);
}
