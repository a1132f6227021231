#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infocoh/counting.hpp"
#include "infocoh/functionals.hpp"
#include "infocoh/structure.hpp"

namespace infocoh {

// Multiplicative cochain: assigns a positive value to each degree-n
// generator tuple [X1|...|Xn] and counting function. Evaluation enforces
// joint locality — the argument is pushed to the tuple's meet before any
// functional sees it — so equal pushforwards give equal values by
// construction. Coboundaries are lazy wrappers, so delta(delta psi) is
// evaluable at any degree.
class CombCochain {
 public:
  // Degree 0: a function of the magnitude alone.
  static CombCochain degree0(MagnitudeFunctional psi);
  // Degree 1 with the same functional at every variable (closed forms).
  static CombCochain uniform1(CombFunctional g);
  // Degree 1 with an explicit functional per variable index.
  static CombCochain per_variable1(std::map<int, CombFunctional> by_variable);
  // The bar-complex differential, degree n -> n+1:
  // (X1 . psi[X2|..]) * prod_k psi[..|Xk Xk+1|..]^{(-1)^k}
  //                   * psi[X1|..|Xn]^{(-1)^{n+1}}.
  static CombCochain coboundary(CombCochain inner);

  int degree() const;

  // gens.size() must equal the degree; nu may live on any variable refining
  // the tuple's meet (VariableMismatch otherwise; MissingProduct when a
  // needed meet is undeclared). Degree 0 accepts nu on any variable.
  FwValue evaluate(const Structure& s, std::span<const int> gens,
                   const CountingFunction& nu) const;

  // Same, for counts already living on the tuple's meet `locality`
  // (the scan loops use this to skip the push).
  FwValue evaluate_local(const Structure& s, std::span<const int> gens,
                         std::span<const long long> counts,
                         int locality) const;

  struct Node;

 private:
  explicit CombCochain(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Additive cochain valued in the alpha-twisted probabilistic module: the
// action weights conditional values by (pushed mass)^alpha. Same locality
// and laziness contract as CombCochain.
class ProbCochain {
 public:
  // Degree 0: a constant (its locality is the one-point terminal).
  static ProbCochain degree0(double module_alpha, double value);
  static ProbCochain uniform1(double module_alpha, ProbFunctional f);
  // Unlisted variables contribute 0, the additive neutral.
  static ProbCochain per_variable1(double module_alpha,
                                   std::map<int, ProbFunctional> by_variable);
  // (X1 . phi[X2|..]) + sum_k (-1)^k phi[..|Xk Xk+1|..]
  //                   + (-1)^{n+1} phi[X1|..|Xn].
  static ProbCochain coboundary(ProbCochain inner);

  int degree() const;
  double module_order() const;

  double evaluate(const Structure& s, std::span<const int> gens,
                  const ProbabilityLaw& p) const;

  double evaluate_local(const Structure& s, std::span<const int> gens,
                        const std::vector<Rational>& weights,
                        int locality) const;

  struct Node;

 private:
  ProbCochain(std::shared_ptr<const Node> node, double alpha);
  std::shared_ptr<const Node> node_;
  double alpha_ = 1.0;
};

// One failing case of a bounded scan. `gens` is the generator tuple,
// `counts`/`weights` the argument on the tuple's meet, `deviation` the
// distance from the expected identity (|ln value| resp. |value|).
struct CheckWitness {
  std::vector<int> gens;
  std::vector<long long> counts;
  std::vector<Rational> weights;
  double deviation = 0.0;
};

struct CheckVerdict {
  bool pass = true;
  std::optional<CheckWitness> witness;
  long long cases = 0;  // (tuple, argument) pairs actually evaluated
};

// Scans every generator tuple of c's degree (tuples whose meets exist) and
// every counting function of magnitude <= bound on the tuple's meet,
// demanding the value 1. Exact kinds are compared exactly; log-domain
// values within log_tol. First failure in (tuple, argument) order wins,
// independent of thread schedule.
CheckVerdict identically_one(const Structure& s, const CombCochain& c,
                             long long bound, double log_tol = 0.0);

// identically_one of the coboundary, with a dense fast path for degree 1.
CheckVerdict cocycle_check(const Structure& s, const CombCochain& psi,
                           long long bound, double log_tol = 0.0);

// A degree-1 cocycle is 1 on single-outcome support: checks psi[X] = 1 on
// every nu concentrated on one outcome, magnitude <= bound.
CheckVerdict single_support_check(const Structure& s, const CombCochain& psi,
                                  long long bound, double log_tol = 0.0);

// Additive analogues over exact law grids: every law whose weights have a
// common denominator <= denom_bound, on each tuple's meet.
CheckVerdict identically_zero(const Structure& s, const ProbCochain& c,
                              int denom_bound, double tol);

CheckVerdict cocycle_check_additive(const Structure& s, const ProbCochain& phi,
                                    int denom_bound, double tol);

// delta phi [Y|Z](p) with phi's module order: the amount by which phi
// violates the order-alpha chain rule at p.
double chain_rule_residual(const Structure& s, const ProbCochain& phi, int y,
                           int z, const ProbabilityLaw& p);

// Meet of a generator tuple (MissingProduct if any fold step lacks one).
int tuple_locality(const Structure& s, std::span<const int> gens);

// Exact laws with a common denominator <= denom_bound on `parts` outcomes,
// in (denominator, composition-rank) order.
void for_each_law(int parts, int denom_bound,
                  const std::function<void(const std::vector<Rational>&)>& fn);

}  // namespace infocoh
