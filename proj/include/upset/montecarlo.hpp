#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

#include "upset/bounds.hpp"
#include "upset/error.hpp"
#include "upset/geometry.hpp"
#include "upset/permutation.hpp"
#include "upset/point_set.hpp"
#include "upset/rng.hpp"

namespace upset {

enum class SampleMode { POINTS, PERMUTATION };

inline std::string_view to_string(SampleMode mode) {
  return mode == SampleMode::POINTS ? "points" : "perm";
}

struct TrialConfig {
  int m = 1;
  int ell = 1;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  SampleMode mode = SampleMode::POINTS;
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

// 95% Wilson score interval; chosen over the normal approximation because it
// stays meaningful at hits = 0, the usual case for tail experiments.
inline WilsonInterval wilson_interval(std::uint64_t hits,
                                      std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half =
      (z / denom) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  WilsonInterval w{std::max(0.0, center - half), std::min(1.0, center + half)};
  // At the extremes center and half agree exactly in real arithmetic; keep
  // rounding residue from pulling the endpoint off 0 or 1.
  if (hits == 0) w.lo = 0.0;
  if (hits == trials) w.hi = 1.0;
  return w;
}

struct McReport {
  TrialConfig config;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double empirical_p = 0.0;
  WilsonInterval wilson95;
  double union_bound_value = 1.0;      // min(1, C(m,ell) 2/ell!)
  std::optional<double> claim3_bound;  // 2*4^-ell, when ell >= 2e sqrt(m)
  bool vacuous = false;
  // Set by theorem1_experiment only.
  std::optional<int> n;
  std::optional<double> tail;  // 8*4^(-n/12)
  std::optional<double> certificate_rate;
};

// Uniform draw from the 2^40 lattice square. A fresh point that repeats an
// already used x or y coordinate is thrown away and redrawn, so the sampled
// set always has the distinct coordinates the rank permutation needs.
inline PointSet sample_point_set(int m, std::uint64_t seed) {
  if (m < 1) raise(ErrorCode::InvalidArgument, "need m >= 1");
  Xoshiro256StarStar rng(seed);
  PointSet set;
  set.lattice_bits = lattice_bits_default;
  set.points.reserve(m);
  std::unordered_set<Coord> xs, ys;
  while (static_cast<int>(set.points.size()) < m) {
    const Point p{
        static_cast<Coord>(rng.next_below(static_cast<std::uint64_t>(lattice_max))),
        static_cast<Coord>(rng.next_below(static_cast<std::uint64_t>(lattice_max)))};
    if (xs.count(p.x) || ys.count(p.y)) continue;
    xs.insert(p.x);
    ys.insert(p.y);
    set.points.push_back(p);
  }
  return set;
}

// Fisher-Yates with rejection-sampled indices, so every permutation is
// exactly equally likely.
inline Permutation sample_permutation(int m, std::uint64_t seed) {
  if (m < 1) raise(ErrorCode::InvalidArgument, "need m >= 1");
  Xoshiro256StarStar rng(seed);
  std::vector<int> values(m);
  std::iota(values.begin(), values.end(), 1);
  for (int i = m - 1; i > 0; --i) {
    const auto j = rng.next_below(static_cast<std::uint64_t>(i) + 1);
    std::swap(values[i], values[static_cast<int>(j)]);
  }
  Permutation p;
  p.values = std::move(values);
  return p;
}

namespace detail {

inline bool monotone_hit(const TrialConfig& cfg, std::uint64_t trial_index) {
  const std::uint64_t seed = trial_seed(cfg.master_seed, trial_index);
  if (cfg.mode == SampleMode::POINTS) {
    const PointSet set = sample_point_set(cfg.m, seed);
    return max_monotone(perm_of(set)) >= cfg.ell;
  }
  return max_monotone(sample_permutation(cfg.m, seed)) >= cfg.ell;
}

}  // namespace detail

// Runs cfg.trials independent trials. Trial i draws its own seed from
// (master_seed, i), so the hit indicator is a pure function of the trial
// index and the report is bit-identical for every worker count; workers just
// split the index range and their counts are summed.
inline McReport run_trials(const TrialConfig& cfg, int workers = 1) {
  if (cfg.m < 1 || cfg.ell < 1 || cfg.trials < 1)
    raise(ErrorCode::InvalidArgument, "need m >= 1, ell >= 1, trials >= 1");
  workers = std::clamp(workers, 1, 256);

  std::uint64_t hits = 0;
  if (workers == 1) {
    for (std::uint64_t i = 0; i < cfg.trials; ++i)
      if (detail::monotone_hit(cfg, i)) ++hits;
  } else {
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = cfg.trials * w / workers;
      const std::uint64_t hi = cfg.trials * (w + 1) / workers;
      pool.emplace_back([&cfg, &partial, w, lo, hi] {
        std::uint64_t count = 0;
        for (std::uint64_t i = lo; i < hi; ++i)
          if (detail::monotone_hit(cfg, i)) ++count;
        partial[w] = count;
      });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t count : partial) hits += count;
  }

  McReport report;
  report.config = cfg;
  report.hits = hits;
  report.trials = cfg.trials;
  report.empirical_p =
      static_cast<double>(hits) / static_cast<double>(cfg.trials);
  report.wilson95 = wilson_interval(hits, cfg.trials);
  report.union_bound_value =
      union_bound(cfg.m, cfg.ell).capped.convert_to<double>();
  const Real threshold =
      2 * boost::multiprecision::exp(Real(1)) *
      boost::multiprecision::sqrt(Real(cfg.m));
  if (Real(cfg.ell) >= threshold)
    report.claim3_bound = std::ldexp(1.0, 1 - 2 * cfg.ell);
  return report;
}

// The non-universality regime: m = floor((n/48e)^2) points, threshold
// floor(n/12). Below n = 131 the threshold allows no points at all; that
// vacuous case is reported rather than sampled. A certificate fires exactly
// when a trial is not a hit, so the rate is 1 - empirical_p.
inline McReport theorem1_experiment(
    int n, std::uint64_t trials, std::uint64_t master_seed, int workers = 1,
    std::optional<std::int64_t> override_m = std::nullopt) {
  if (n < 12) raise(ErrorCode::InvalidArgument, "need n >= 12");
  const TheoremThreshold threshold = theorem_threshold(n);
  const std::int64_t m = override_m.value_or(threshold.m_max);
  if (m < 0 || m > std::numeric_limits<int>::max())
    raise(ErrorCode::TooLarge, "point count out of range");
  const int ell = monotone_threshold(n);

  McReport report;
  if (m == 0) {
    report.config = TrialConfig{0, ell, 0, master_seed, SampleMode::POINTS};
    report.vacuous = true;
    report.wilson95 = {0.0, 1.0};
    report.union_bound_value = 0.0;  // no points, no monotone subsequence
    report.certificate_rate = 1.0;
  } else {
    const TrialConfig cfg{static_cast<int>(m), ell, trials, master_seed,
                          SampleMode::POINTS};
    report = run_trials(cfg, workers);
    report.certificate_rate = 1.0 - report.empirical_p;
  }
  report.n = n;
  report.tail = threshold.tail;
  return report;
}

}  // namespace upset
