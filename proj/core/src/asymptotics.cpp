#include "infocoh/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "infocoh/errors.hpp"

namespace infocoh {
namespace {

void check_weights(const std::vector<Rational>& p) {
  if (p.empty()) fail(Errc::DomainViolation, "empty weight vector");
  Rational sum = 0;
  for (const auto& w : p) {
    if (w < 0) fail(Errc::DomainViolation, "negative weight");
    sum += w;
  }
  if (sum != 1) fail(Errc::DomainViolation, "weights must sum to 1");
}

double tail_certificate(const std::vector<RateSample>& samples, double limit) {
  if (samples.empty()) return 0.0;
  size_t tail = (samples.size() + 2) / 3;  // final third, rounded up
  double worst = 0.0;
  for (size_t i = samples.size() - tail; i < samples.size(); ++i)
    worst = std::max(worst, std::abs(samples[i].value - limit));
  return worst;
}

RateEstimate assemble(double alpha, std::vector<RateSample> samples) {
  RateEstimate r;
  r.alpha = alpha;
  r.samples = std::move(samples);
  r.limit = r.samples.empty() ? 0.0 : r.samples.back().value;
  r.certificate = tail_certificate(r.samples, r.limit);
  return r;
}

// Growth order and target prefactor by family kind.
struct FamilyProfile {
  double alpha = 1.0;
  double prefactor = 1.0;
};

FamilyProfile profile_of(const AdmissibleSequence& d) {
  switch (d.kind()) {
    case AdmissibleSequence::Kind::Natural:
      return {1.0, 1.0};
    case AdmissibleSequence::Kind::Gaussian:
      return {2.0, 0.5 * log_rational(d.gaussian_q())};
    case AdmissibleSequence::Kind::AlphaFamily:
      return {d.alpha_order(), d.alpha_k() / d.alpha_order()};
    default:
      fail(Errc::UnsupportedFamily,
           "no growth target for family '" + d.tag() + "'");
  }
}

}  // namespace

std::vector<long long> rational_approximation(const std::vector<Rational>& p,
                                              long long n) {
  check_weights(p);
  if (n < 1) fail(Errc::DomainViolation, "magnitude must be positive");
  std::vector<long long> base(p.size(), 0);
  std::vector<Rational> rem(p.size());
  long long assigned = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    Rational ideal = p[i] * n;
    Integer fl = numerator(ideal) / denominator(ideal);
    base[i] = fl.convert_to<long long>();
    rem[i] = ideal - Rational(fl);
    assigned += base[i];
  }
  long long missing = n - assigned;
  std::vector<size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return rem[a] > rem[b]; });
  for (long long m = 0; m < missing; ++m) ++base[order[size_t(m)]];
  return base;
}

std::vector<CountingFunction> rational_approximation_sequence(
    const Structure& s, const ProbabilityLaw& p,
    std::span<const long long> ns) {
  for (size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1])
      fail(Errc::BadArgument, "sample magnitudes must increase");
  std::vector<CountingFunction> out;
  out.reserve(ns.size());
  for (long long n : ns)
    out.push_back(
        make_counts(s, p.variable, rational_approximation(p.weights, n)));
  return out;
}

std::vector<long long> default_scales(double alpha) {
  long long cap = alpha <= 1.0 ? 4096 : 256;
  std::vector<long long> ns;
  for (long long n = 16; n <= cap; n *= 2) ns.push_back(n);
  return ns;
}

RateEstimate rate_estimate(const AdmissibleSequence& d,
                           const std::vector<Rational>& p, double alpha,
                           std::span<const long long> ns) {
  std::vector<RateSample> samples;
  samples.reserve(ns.size());
  for (long long n : ns) {
    auto counts = rational_approximation(p, n);
    double v = fw_multinomial_log(d, counts) / std::pow(double(n), alpha);
    samples.push_back({n, v});
  }
  return assemble(alpha, std::move(samples));
}

RateEstimate rate_estimate(const Structure& s, const CombCochain& psi, int x,
                           const std::vector<Rational>& p, double alpha,
                           std::span<const long long> ns) {
  if (int(p.size()) != s.outcome_count(x))
    fail(Errc::VariableMismatch, "one weight per outcome of '" +
                                     s.variable(x).id + "' expected");
  std::vector<RateSample> samples;
  samples.reserve(ns.size());
  int gens[1] = {x};
  for (long long n : ns) {
    auto counts = rational_approximation(p, n);
    double v = psi.evaluate(s, gens, make_counts(s, x, counts)).log() /
               std::pow(double(n), alpha);
    samples.push_back({n, v});
  }
  return assemble(alpha, std::move(samples));
}

LimitVerdict entropy_limit_check(const AdmissibleSequence& d,
                                 const std::vector<Rational>& p,
                                 double tolerance, std::span<const long long> ns,
                                 std::optional<double> alpha) {
  check_weights(p);
  FamilyProfile prof = profile_of(d);
  double order = alpha.value_or(prof.alpha);
  std::vector<long long> scales(ns.begin(), ns.end());
  if (scales.empty()) scales = default_scales(order);

  LimitVerdict v;
  v.alpha = order;
  v.estimate = rate_estimate(d, p, order, scales);
  v.target = prof.prefactor * entropy_of_weights(order, p);
  v.deviation = std::abs(v.estimate.limit - v.target);
  v.pass = true;

  if (v.estimate.certificate > tolerance) {
    v.pass = false;
    v.message = "tail certificate " + std::to_string(v.estimate.certificate) +
                " exceeds tolerance";
  } else if (v.deviation > tolerance) {
    v.pass = false;
    v.message = "limit " + std::to_string(v.estimate.limit) +
                " misses target " + std::to_string(v.target) + " by " +
                std::to_string(v.deviation);
  }

  if (d.kind() == AdmissibleSequence::Kind::AlphaFamily &&
      d.alpha_k() != 0.0) {
    double k = d.alpha_k();
    double a = d.alpha_order();
    // direction of ln[n]! between K(n^a/a - n) and K((n+1)^a/a - 1/a - n)
    bool upright = (k > 0) == (a > 1);
    bool ok = true;
    for (const auto& smp : v.estimate.samples) {
      double n = double(smp.n);
      double lo = k * (std::pow(n, a) / a - n);
      double hi = k * (std::pow(n + 1, a) / a - 1.0 / a - n);
      double lf = d.factorial_log(smp.n);
      if (!upright) std::swap(lo, hi);
      if (!(lo < lf && lf < hi)) {
        ok = false;
        break;
      }
    }
    v.sandwich = ok;
    if (!ok) {
      v.pass = false;
      if (!v.message.empty()) v.message += "; ";
      v.message += "factorial sandwich bound violated";
    }
  }
  return v;
}

ChainVerdict chain_rule_limit_check(const AdmissibleSequence& d,
                                    const std::vector<Rational>& p,
                                    const std::vector<int>& grouping,
                                    double tolerance,
                                    std::span<const long long> ns) {
  check_weights(p);
  if (grouping.size() != p.size())
    fail(Errc::InvalidGrouping, "one group per weight expected");
  int groups = 0;
  for (int g : grouping) groups = std::max(groups, g + 1);
  {
    std::vector<char> seen(size_t(groups), 0);
    for (int g : grouping) {
      if (g < 0) fail(Errc::InvalidGrouping, "negative group");
      seen[size_t(g)] = 1;
    }
    for (char c : seen)
      if (!c) fail(Errc::InvalidGrouping, "group indices must be 0..G-1");
  }
  FamilyProfile prof = profile_of(d);

  std::vector<long long> scales(ns.begin(), ns.end());
  if (scales.empty()) scales = default_scales(prof.alpha);

  ChainVerdict v;
  v.alpha = prof.alpha;
  for (long long n : scales) {
    auto counts = rational_approximation(p, n);
    double scale = std::pow(double(n), prof.alpha);
    double lhs = fw_multinomial_log(d, counts) / scale;

    std::vector<long long> sums(size_t(groups), 0);
    for (size_t i = 0; i < counts.size(); ++i)
      sums[size_t(grouping[i])] += counts[i];
    double rhs = fw_multinomial_log(d, sums);
    for (int g = 0; g < groups; ++g) {
      if (sums[size_t(g)] == 0) continue;
      std::vector<long long> within;
      for (size_t i = 0; i < counts.size(); ++i)
        if (grouping[i] == g) within.push_back(counts[i]);
      rhs += fw_multinomial_log(d, within);
    }
    rhs /= scale;
    v.samples.push_back({n, lhs, rhs});
  }
  v.residual = v.samples.empty()
                   ? 0.0
                   : std::abs(v.samples.back().lhs - v.samples.back().rhs);
  v.pass = v.residual <= tolerance;
  if (!v.pass)
    v.message = "residual " + std::to_string(v.residual) +
                " exceeds tolerance at n = " +
                std::to_string(v.samples.back().n);
  return v;
}

}  // namespace infocoh
