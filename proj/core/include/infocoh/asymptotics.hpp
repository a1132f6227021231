#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infocoh/admissible.hpp"
#include "infocoh/cochain.hpp"
#include "infocoh/counting.hpp"
#include "infocoh/rational.hpp"
#include "infocoh/structure.hpp"

namespace infocoh {

// Largest-remainder rounding of n*p to integers summing to n; ties go to
// the earliest index. Deviation per coordinate is below 1, so the ratios
// converge to p as n grows.
std::vector<long long> rational_approximation(const std::vector<Rational>& p,
                                              long long n);

std::vector<CountingFunction> rational_approximation_sequence(
    const Structure& s, const ProbabilityLaw& p, std::span<const long long> ns);

// Powers of two from 16 up to 4096 when alpha <= 1, else up to 256 (the
// super-linear regimes converge much faster and cost more per sample).
std::vector<long long> default_scales(double alpha);

struct RateSample {
  long long n = 0;
  double value = 0.0;  // ln W(nu_n) / n^alpha
};

// Growth-rate record: the limit is the last sample, the certificate the
// largest deviation from it over the final third of the samples.
struct RateEstimate {
  double alpha = 1.0;
  std::vector<RateSample> samples;
  double limit = 0.0;
  double certificate = 0.0;
};

RateEstimate rate_estimate(const AdmissibleSequence& d,
                           const std::vector<Rational>& p, double alpha,
                           std::span<const long long> ns);

// Same, reading the coefficient values off a degree-1 cochain at variable x
// (p must have one weight per outcome of x).
RateEstimate rate_estimate(const Structure& s, const CombCochain& psi, int x,
                           const std::vector<Rational>& p, double alpha,
                           std::span<const long long> ns);

struct LimitVerdict {
  bool pass = false;
  RateEstimate estimate;
  double alpha = 1.0;
  double target = 0.0;
  double deviation = 0.0;  // |limit - target|
  // Engaged for the exponential family: strict two-sided factorial bounds
  // at every sampled n, direction flipped with sign(K) * sign(alpha - 1).
  std::optional<bool> sandwich;
  std::string message;  // empty on pass
};

// Growth order and entropy target are read off the family:
//   natural        -> alpha 1, S_1(p)
//   gaussian q     -> alpha 2, (ln q / 2) S_2(p)
//   alpha K,order  -> alpha order, (K/alpha) S_alpha(p)
// (UnsupportedFamily otherwise.) Passing `alpha` overrides the
// normalization and targets S_alpha at the requested order instead, so a
// family measured at the wrong order fails honestly.
LimitVerdict entropy_limit_check(const AdmissibleSequence& d,
                                 const std::vector<Rational>& p,
                                 double tolerance,
                                 std::span<const long long> ns = {},
                                 std::optional<double> alpha = std::nullopt);

struct ChainSample {
  long long n = 0;
  double lhs = 0.0;  // ln W(full parts) / n^alpha
  double rhs = 0.0;  // grouped + within-group terms, same normalization
};

struct ChainVerdict {
  bool pass = false;
  double alpha = 1.0;
  std::vector<ChainSample> samples;
  double residual = 0.0;  // |lhs - rhs| at the largest n
  std::string message;
};

// Normalized logs of both sides of the grouping identity along the
// approximating counts; the residual at the largest n must stay within
// tolerance. `grouping[i]` is the group of part i (groups 0..G-1).
ChainVerdict chain_rule_limit_check(const AdmissibleSequence& d,
                                    const std::vector<Rational>& p,
                                    const std::vector<int>& grouping,
                                    double tolerance,
                                    std::span<const long long> ns = {});

}  // namespace infocoh
