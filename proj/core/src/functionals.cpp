#include "infocoh/functionals.hpp"

#include <cmath>

#include "infocoh/errors.hpp"

namespace infocoh {

MagnitudeFunctional MagnitudeFunctional::one() { return {}; }

MagnitudeFunctional MagnitudeFunctional::exp_k(double k) {
  MagnitudeFunctional f;
  f.kind_ = Kind::ExpK;
  f.k_ = k;
  return f;
}

MagnitudeFunctional MagnitudeFunctional::table(std::vector<FwValue> values) {
  if (values.empty()) fail(Errc::BadArgument, "magnitude table is empty");
  if (!values.front().is_one())
    fail(Errc::DomainViolation, "magnitude table must map 0 to 1");
  MagnitudeFunctional f;
  f.kind_ = Kind::Table;
  f.values_ = std::make_shared<const std::vector<FwValue>>(std::move(values));
  return f;
}

FwValue MagnitudeFunctional::operator()(long long n) const {
  if (n < 0) fail(Errc::OutOfRange, "magnitude must be nonnegative");
  switch (kind_) {
    case Kind::One:
      return FwValue::exact(Rational(1));
    case Kind::ExpK:
      return FwValue::from_log(k_ * static_cast<double>(n));
    case Kind::Table:
      if (n >= static_cast<long long>(values_->size()))
        fail(Errc::TableBoundExceeded,
             "magnitude " + std::to_string(n) + " beyond tabulated range");
      return (*values_)[static_cast<std::size_t>(n)];
  }
  fail(Errc::BadArgument, "corrupt magnitude functional");
}

CombFunctional CombFunctional::one() { return {}; }

CombFunctional CombFunctional::exp_k(double k) {
  CombFunctional f;
  f.kind_ = Kind::ExpK;
  f.k_ = k;
  return f;
}

CombFunctional CombFunctional::fw(AdmissibleSequence d) {
  CombFunctional f;
  f.kind_ = Kind::Fw;
  f.d_ = std::make_shared<const AdmissibleSequence>(std::move(d));
  return f;
}

CombFunctional CombFunctional::fw_pow(AdmissibleSequence d, double r) {
  CombFunctional f;
  f.kind_ = Kind::FwPow;
  f.d_ = std::make_shared<const AdmissibleSequence>(std::move(d));
  f.r_ = r;
  return f;
}

CombFunctional CombFunctional::table(
    std::shared_ptr<const CompositionIndex> index, std::vector<FwValue> values) {
  if (!index) fail(Errc::BadArgument, "table needs an index");
  if (values.size() != index->size())
    fail(Errc::BadArgument, "table size does not match its index");
  CombFunctional f;
  f.kind_ = Kind::Table;
  f.index_ = std::move(index);
  f.values_ = std::make_shared<const std::vector<FwValue>>(std::move(values));
  return f;
}

const AdmissibleSequence& CombFunctional::sequence() const {
  if (!d_) fail(Errc::BadArgument, "functional has no admissible sequence");
  return *d_;
}

FwValue CombFunctional::eval(std::span<const long long> counts) const {
  switch (kind_) {
    case Kind::One:
      return FwValue::exact(Rational(1));
    case Kind::ExpK: {
      long long total = 0;
      for (long long c : counts) total += c;
      return FwValue::from_log(k_ * static_cast<double>(total));
    }
    case Kind::Fw:
      return fw_multinomial(*d_, counts);
    case Kind::FwPow: {
      if (d_->is_exact() && r_ == std::floor(r_) && std::abs(r_) < 1e9)
        return fw_multinomial(*d_, counts).pow(static_cast<long long>(r_));
      return FwValue::from_log(r_ * fw_multinomial_log(*d_, counts));
    }
    case Kind::Table:
      return (*values_)[index_->rank(counts)];
  }
  fail(Errc::BadArgument, "corrupt counting functional");
}

CombFunctional tabulate(const CombFunctional& g,
                        std::shared_ptr<const CompositionIndex> index) {
  std::vector<FwValue> values(index->size());
  index->for_each([&](std::size_t r, std::span<const long long> counts) {
    values[r] = g.eval(counts);
  });
  return CombFunctional::table(std::move(index), std::move(values));
}

ProbFunctional ProbFunctional::constant(double c) {
  ProbFunctional f;
  f.c_ = c;
  return f;
}

ProbFunctional ProbFunctional::shannon_like(double alpha) {
  if (!(alpha > 0.0)) fail(Errc::DomainViolation, "entropy order must be positive");
  ProbFunctional f;
  f.kind_ = Kind::Entropy;
  f.alpha_ = alpha;
  return f;
}

ProbFunctional ProbFunctional::hash_random(std::uint64_t seed) {
  ProbFunctional f;
  f.kind_ = Kind::HashRandom;
  f.seed_ = seed;
  return f;
}

double ProbFunctional::eval(const std::vector<Rational>& weights) const {
  switch (kind_) {
    case Kind::Constant:
      return c_;
    case Kind::Entropy:
      return entropy_of_weights(alpha_, weights);
    case Kind::HashRandom: {
      // FNV-1a over the exact weight strings, so the "table" is a pure
      // function of the law, independent of visit order and platform.
      std::uint64_t h = 14695981039346656037ull ^ seed_;
      auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
          h ^= c;
          h *= 1099511628211ull;
        }
        h ^= '|';
        h *= 1099511628211ull;
      };
      for (const Rational& w : weights) mix(format_rational(w));
      return static_cast<double>(h >> 11) * 0x1.0p-53;
    }
  }
  fail(Errc::BadArgument, "corrupt probability functional");
}

FwValue act_mult(const Structure& s, int coarser,
                 const std::function<FwValue(const CountingFunction&)>& g,
                 const CountingFunction& nu) {
  if (!s.refines(nu.variable, coarser))
    fail(Errc::NotCoarser, "'" + s.variable(coarser).id +
                               "' is not a coarsening of '" +
                               s.variable(nu.variable).id + "'");
  FwValue out = FwValue::exact(Rational(1));
  for (int y = 0; y < s.outcome_count(coarser); ++y) {
    auto restricted = restrict_counts(s, nu, coarser, y);
    if (!restricted) continue;
    out = out * g(*restricted);
  }
  return out;
}

FwValue act_mult(const Structure& s, int coarser, const CombFunctional& g,
                 const CountingFunction& nu) {
  return act_mult(
      s, coarser,
      [&g](const CountingFunction& r) { return g.eval(r.counts); }, nu);
}

double act_alpha(const Structure& s, int coarser, double alpha,
                 const std::function<double(const ProbabilityLaw&)>& f,
                 const ProbabilityLaw& p) {
  if (!s.refines(p.variable, coarser))
    fail(Errc::NotCoarser, "'" + s.variable(coarser).id +
                               "' is not a coarsening of '" +
                               s.variable(p.variable).id + "'");
  ProbabilityLaw pushed = push_prob(s, p, coarser);
  double out = 0.0;
  for (int y = 0; y < s.outcome_count(coarser); ++y) {
    const Rational& mass = pushed.weights[static_cast<std::size_t>(y)];
    if (mass == 0) continue;
    double weight = std::pow(to_double(mass), alpha);
    out += weight * f(condition_prob(s, p, coarser, y));
  }
  return out;
}

}  // namespace infocoh
