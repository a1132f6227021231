#pragma once

#include <optional>
#include <vector>

#include "infocoh/rational.hpp"
#include "infocoh/structure.hpp"

namespace infocoh {

// Integer-valued observation tally on one variable, indexed by outcome
// position. Semantically total: absent outcomes hold 0.
struct CountingFunction {
  int variable = -1;
  std::vector<long long> counts;

  long long magnitude() const {
    long long m = 0;
    for (long long c : counts) m += c;
    return m;
  }
  // Outcome indices with nonzero count.
  std::vector<int> support() const;
};

// Exact probability assignment on one variable; weights sum to 1.
struct ProbabilityLaw {
  int variable = -1;
  std::vector<Rational> weights;
};

struct EntropyOrder {
  double alpha = 1.0;
};

// Throws DomainViolation unless every count is >= 0 and some count is > 0.
CountingFunction make_counts(const Structure& s, int variable,
                             std::vector<long long> counts);

// Throws DomainViolation unless weights are >= 0 and sum to exactly 1.
ProbabilityLaw make_law(const Structure& s, int variable,
                        std::vector<Rational> weights);

// Throws DomainViolation unless alpha > 0.
EntropyOrder make_order(double alpha);

// Sums counts over each fiber of the arrow to `target`; magnitude preserved.
CountingFunction push_counts(const Structure& s, const CountingFunction& nu,
                             int target);

// Zeroes nu outside the fiber of `outcome` under the arrow to `coarser`;
// nullopt when nothing of nu lies in that fiber.
std::optional<CountingFunction> restrict_counts(const Structure& s,
                                                const CountingFunction& nu,
                                                int coarser, int outcome);

// Marginalization: exact fiber sums.
ProbabilityLaw push_prob(const Structure& s, const ProbabilityLaw& p,
                         int target);

// Conditional law p(.)/Y_*p(outcome) on the fiber, 0 elsewhere.
// Throws ZeroConditioningMass when the pushed mass vanishes.
ProbabilityLaw condition_prob(const Structure& s, const ProbabilityLaw& p,
                              int coarser, int outcome);

// Tsallis-type structural entropy: order 1 gives -sum p ln p in nats
// (0 ln 0 = 0); other orders give (sum p^alpha - 1)/(1 - alpha).
double entropy(const EntropyOrder& order, const ProbabilityLaw& p);

// Same formulas on a bare weight vector (need not involve a structure).
double entropy_of_weights(double alpha, const std::vector<Rational>& weights);

// Forgets zero/nonzero structure: exact law whose weights are
// counts / magnitude.
ProbabilityLaw law_from_counts(const Structure& s, const CountingFunction& nu);

}  // namespace infocoh
