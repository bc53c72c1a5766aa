#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "upset/error.hpp"
#include "upset/permutation.hpp"

namespace upset {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 100 decimal digits (~335 bits), enough that the only way a threshold
// comparison could flip is a genuine near-integer boundary.
using Real = boost::multiprecision::cpp_bin_float_100;

struct BoundParams {
  int n = 0;
  std::int64_t m = 0;
  int ell = 0;
};

inline int monotone_threshold(int n) { return n / 12; }

inline BoundParams bound_params(int n, std::int64_t m) {
  if (n < 1 || m < 0) raise(ErrorCode::InvalidArgument, "need n >= 1, m >= 0");
  return BoundParams{n, m, monotone_threshold(n)};
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(std::int64_t m, std::int64_t ell) {
  if (ell < 0 || ell > m) return 0;
  ell = std::min(ell, m - ell);
  BigInt num = 1, den = 1;
  for (std::int64_t i = 1; i <= ell; ++i) {
    num *= m - ell + i;
    den *= i;
  }
  return num / den;
}

inline constexpr int exact_enumeration_limit = 9;

// Probability that a uniform permutation of {1..m} contains a monotone
// subsequence of length >= ell, as an exact fraction obtained by enumerating
// all m! permutations. This is the oracle the closed-form bounds are checked
// against, so it deliberately shares no code with them.
inline Rational exact_monotone_probability(int m, int ell) {
  if (m < 1) raise(ErrorCode::InvalidArgument, "need m >= 1");
  if (m > exact_enumeration_limit)
    raise(ErrorCode::TooLarge, "exact enumeration is limited to m <= 9");
  if (ell < 1 || ell > m)
    raise(ErrorCode::InvalidArgument, "need 1 <= ell <= m");

  std::vector<int> values(m);
  std::iota(values.begin(), values.end(), 1);
  std::int64_t hits = 0, total = 0;
  do {
    ++total;
    if (lis_length(values) >= ell || lds_length(values) >= ell) ++hits;
  } while (std::next_permutation(values.begin(), values.end()));
  return Rational(hits, total);
}

struct UnionBound {
  Rational uncapped;  // C(m, ell) * 2 / ell!
  Rational capped;    // min(1, uncapped)
};

// ell > m is allowed and gives 0: there is no ell-subset to be monotone.
inline UnionBound union_bound(std::int64_t m, int ell) {
  if (m < 0 || ell < 1) raise(ErrorCode::InvalidArgument, "need m >= 0, ell >= 1");
  UnionBound b;
  b.uncapped = Rational(BigInt(2) * binomial(m, ell), factorial(ell));
  b.capped = b.uncapped > 1 ? Rational(1) : b.uncapped;
  return b;
}

struct ChainStep {
  std::string label;
  Real value;
};

struct StirlingChain {
  std::int64_t m = 0;
  int ell = 0;
  std::vector<ChainStep> steps;
  Real ell_threshold;       // 2 e sqrt(m)
  bool precondition_met = false;  // ell >= 2 e sqrt(m)
  bool monotone = true;
  Real claim_bound;         // 2 * 4^-ell (only meaningful when met)
  Real lifted_tail;         // 8 * 4^-ell: the failure tail at n = 12 ell
};

// Evaluates each displayed estimate of the union-bound chain
//   C(m,ell) 2/ell!  <=  2 m^ell / (ell/e)^(2 ell)  =  2 (m e^2/ell^2)^ell
//   <=  2 * 4^-ell                     (the last step needs ell >= 2e sqrt(m))
// and checks the sequence never decreases. The two middle forms are equal
// algebraically; evaluating both guards the numeric path.
inline StirlingChain stirling_chain(std::int64_t m, int ell) {
  if (ell < 1) raise(ErrorCode::InvalidArgument, "need ell >= 1");
  if (m < 0) raise(ErrorCode::InvalidArgument, "need m >= 0");

  StirlingChain chain;
  chain.m = m;
  chain.ell = ell;

  const Real e = boost::multiprecision::exp(Real(1));
  const Real rm = Real(m);
  const Real rl = Real(ell);

  const UnionBound ub = union_bound(m, ell);
  chain.steps.push_back({"union_bound", Real(ub.uncapped)});

  const Real stirling_form =
      2 * boost::multiprecision::pow(rm, rl) /
      boost::multiprecision::pow(rl / e, 2 * rl);
  chain.steps.push_back({"stirling", stirling_form});

  const Real ratio_form =
      2 * boost::multiprecision::pow(rm * e * e / (rl * rl), rl);
  chain.steps.push_back({"ratio_power", ratio_form});

  chain.ell_threshold = 2 * e * boost::multiprecision::sqrt(rm);
  chain.precondition_met = rl >= chain.ell_threshold;
  chain.claim_bound = 2 * boost::multiprecision::pow(Real(4), -rl);
  chain.lifted_tail = 4 * chain.claim_bound;
  if (chain.precondition_met)
    chain.steps.push_back({"geometric_tail", chain.claim_bound});

  // Adjacent steps may only differ downward by rounding noise.
  const Real slack = Real("1e-80");
  for (std::size_t i = 1; i < chain.steps.size(); ++i) {
    const Real& prev = chain.steps[i - 1].value;
    const Real& cur = chain.steps[i].value;
    if (cur < prev * (1 - slack)) chain.monotone = false;
  }
  return chain;
}

struct TheoremThreshold {
  int n = 0;
  std::int64_t m_max = 0;
  bool boundary_flag = false;  // the error interval straddles an integer
  std::int64_t m_max_low = 0;  // both candidates when flagged
  std::int64_t m_max_high = 0;
  double tail = 0.0;        // 8 * 4^(-n/12)
  double tail_log10 = 0.0;  // exact even when tail underflows a double
};

// m_max = floor((n / 48e)^2), evaluated at 100-digit precision with a
// symmetric 2^-200 relative error interval. 48e is irrational, so the
// interval can only straddle an integer if the computation itself is broken;
// the flag reports both floors instead of silently picking one.
inline TheoremThreshold theorem_threshold(int n) {
  if (n < 4) raise(ErrorCode::InvalidArgument, "need n >= 4");

  TheoremThreshold t;
  t.n = n;

  const Real e = boost::multiprecision::exp(Real(1));
  const Real value = boost::multiprecision::pow(Real(n) / (48 * e), 2);
  const Real eps = boost::multiprecision::ldexp(Real(1), -200);
  const Real lo = value * (1 - eps);
  const Real hi = value * (1 + eps);
  t.m_max_low = static_cast<std::int64_t>(boost::multiprecision::floor(lo));
  t.m_max_high = static_cast<std::int64_t>(boost::multiprecision::floor(hi));
  t.boundary_flag = t.m_max_low != t.m_max_high;
  t.m_max = t.m_max_high;

  const Real tail =
      8 * boost::multiprecision::pow(Real(4), -Real(n) / 12);
  t.tail = tail.convert_to<double>();
  t.tail_log10 = boost::multiprecision::log10(tail).convert_to<double>();
  return t;
}

}  // namespace upset
