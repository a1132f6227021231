#include "infocoh/counting.hpp"

#include <cmath>

#include "infocoh/errors.hpp"

namespace infocoh {

std::vector<int> CountingFunction::support() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(counts.size()); ++i)
    if (counts[static_cast<std::size_t>(i)] != 0) out.push_back(i);
  return out;
}

namespace {

void check_variable(const Structure& s, int variable, std::size_t n_values,
                    const char* what) {
  if (variable < 0 || variable >= s.var_count())
    fail(Errc::UnknownVariable, std::string(what) + ": variable index out of range");
  if (n_values != static_cast<std::size_t>(s.outcome_count(variable)))
    fail(Errc::VariableMismatch,
         std::string(what) + ": value count does not match outcome count of '" +
             s.variable(variable).id + "'");
}

}  // namespace

CountingFunction make_counts(const Structure& s, int variable,
                             std::vector<long long> counts) {
  check_variable(s, variable, counts.size(), "make_counts");
  long long total = 0;
  for (long long c : counts) {
    if (c < 0) fail(Errc::DomainViolation, "negative count");
    total += c;
  }
  if (total == 0) fail(Errc::DomainViolation, "counting function must have positive magnitude");
  return {variable, std::move(counts)};
}

ProbabilityLaw make_law(const Structure& s, int variable,
                        std::vector<Rational> weights) {
  check_variable(s, variable, weights.size(), "make_law");
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) fail(Errc::DomainViolation, "negative probability weight");
    total += w;
  }
  if (total != 1) fail(Errc::DomainViolation, "probability weights must sum to 1");
  return {variable, std::move(weights)};
}

EntropyOrder make_order(double alpha) {
  if (!(alpha > 0.0)) fail(Errc::DomainViolation, "entropy order must be positive");
  return {alpha};
}

CountingFunction push_counts(const Structure& s, const CountingFunction& nu,
                             int target) {
  check_variable(s, nu.variable, nu.counts.size(), "push_counts");
  const auto& map = s.fiber_map(nu.variable, target);
  CountingFunction out;
  out.variable = target;
  out.counts.assign(static_cast<std::size_t>(s.outcome_count(target)), 0);
  for (std::size_t i = 0; i < nu.counts.size(); ++i)
    out.counts[static_cast<std::size_t>(map[i])] += nu.counts[i];
  return out;
}

std::optional<CountingFunction> restrict_counts(const Structure& s,
                                                const CountingFunction& nu,
                                                int coarser, int outcome) {
  check_variable(s, nu.variable, nu.counts.size(), "restrict_counts");
  if (outcome < 0 || outcome >= s.outcome_count(coarser))
    fail(Errc::UnknownOutcome, "restrict_counts: outcome index out of range");
  const auto& map = s.fiber_map(nu.variable, coarser);
  CountingFunction out;
  out.variable = nu.variable;
  out.counts.assign(nu.counts.size(), 0);
  long long total = 0;
  for (std::size_t i = 0; i < nu.counts.size(); ++i)
    if (map[i] == outcome) {
      out.counts[i] = nu.counts[i];
      total += nu.counts[i];
    }
  if (total == 0) return std::nullopt;
  return out;
}

ProbabilityLaw push_prob(const Structure& s, const ProbabilityLaw& p,
                         int target) {
  check_variable(s, p.variable, p.weights.size(), "push_prob");
  const auto& map = s.fiber_map(p.variable, target);
  ProbabilityLaw out;
  out.variable = target;
  out.weights.assign(static_cast<std::size_t>(s.outcome_count(target)), Rational(0));
  for (std::size_t i = 0; i < p.weights.size(); ++i)
    out.weights[static_cast<std::size_t>(map[i])] += p.weights[i];
  return out;
}

ProbabilityLaw condition_prob(const Structure& s, const ProbabilityLaw& p,
                              int coarser, int outcome) {
  check_variable(s, p.variable, p.weights.size(), "condition_prob");
  if (outcome < 0 || outcome >= s.outcome_count(coarser))
    fail(Errc::UnknownOutcome, "condition_prob: outcome index out of range");
  const auto& map = s.fiber_map(p.variable, coarser);
  Rational mass = 0;
  for (std::size_t i = 0; i < p.weights.size(); ++i)
    if (map[i] == outcome) mass += p.weights[i];
  if (mass == 0)
    fail(Errc::ZeroConditioningMass,
         "conditioning on zero-mass outcome '" +
             s.variable(coarser).outcomes[static_cast<std::size_t>(outcome)] + "'");
  ProbabilityLaw out;
  out.variable = p.variable;
  out.weights.assign(p.weights.size(), Rational(0));
  for (std::size_t i = 0; i < p.weights.size(); ++i)
    if (map[i] == outcome) out.weights[i] = p.weights[i] / mass;
  return out;
}

double entropy_of_weights(double alpha, const std::vector<Rational>& weights) {
  if (alpha == 1.0) {
    double h = 0.0;
    for (const Rational& w : weights) {
      if (w == 0) continue;
      double x = to_double(w);
      h -= x * std::log(x);
    }
    return h;
  }
  double sum = 0.0;
  for (const Rational& w : weights) {
    if (w == 0) continue;  // 0^alpha = 0 even for alpha < 1
    sum += std::pow(to_double(w), alpha);
  }
  return (sum - 1.0) / (1.0 - alpha);
}

double entropy(const EntropyOrder& order, const ProbabilityLaw& p) {
  return entropy_of_weights(order.alpha, p.weights);
}

ProbabilityLaw law_from_counts(const Structure& s, const CountingFunction& nu) {
  check_variable(s, nu.variable, nu.counts.size(), "law_from_counts");
  long long m = nu.magnitude();
  if (m <= 0) fail(Errc::DomainViolation, "law_from_counts: zero magnitude");
  ProbabilityLaw out;
  out.variable = nu.variable;
  out.weights.reserve(nu.counts.size());
  for (long long c : nu.counts) out.weights.emplace_back(Rational(c) / m);
  return out;
}

}  // namespace infocoh
