#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "infocoh/admissible.hpp"
#include "infocoh/combinatorics.hpp"
#include "infocoh/counting.hpp"
#include "infocoh/value.hpp"

namespace infocoh {

// Function of the magnitude alone: the content of a degree-0 multiplicative
// cochain. Table entries index by magnitude starting at 0, with the n = 0
// value pinned to 1.
class MagnitudeFunctional {
 public:
  enum class Kind { One, ExpK, Table };

  static MagnitudeFunctional one();
  // n -> e^{k n}.
  static MagnitudeFunctional exp_k(double k);
  // values[n] is the value at magnitude n; values[0] must be exactly 1.
  static MagnitudeFunctional table(std::vector<FwValue> values);

  Kind kind() const { return kind_; }
  double k() const { return k_; }

  // Throws TableBoundExceeded past the end of a table.
  FwValue operator()(long long n) const;

 private:
  MagnitudeFunctional() = default;
  Kind kind_ = Kind::One;
  double k_ = 0.0;
  std::shared_ptr<const std::vector<FwValue>> values_;
};

// Positive-valued function of counting vectors: the per-variable content of
// a degree-1 multiplicative cochain.
class CombFunctional {
 public:
  enum class Kind { One, ExpK, Fw, FwPow, Table };

  static CombFunctional one();
  // nu -> e^{k |nu|}.
  static CombFunctional exp_k(double k);
  // nu -> W_D(nu).
  static CombFunctional fw(AdmissibleSequence d);
  // nu -> W_D(nu)^r; exact when D is rational-valued and r integral.
  static CombFunctional fw_pow(AdmissibleSequence d, double r);
  // Explicit values indexed by `index`; table size must equal index->size().
  static CombFunctional table(std::shared_ptr<const CompositionIndex> index,
                              std::vector<FwValue> values);

  Kind kind() const { return kind_; }
  const AdmissibleSequence& sequence() const;

  // counts must have the arity the functional expects (tables check against
  // their index; closed forms take any arity). Throws TableBoundExceeded
  // outside a table's domain.
  FwValue eval(std::span<const long long> counts) const;

 private:
  CombFunctional() = default;
  Kind kind_ = Kind::One;
  double k_ = 0.0;
  double r_ = 1.0;
  std::shared_ptr<const AdmissibleSequence> d_;
  std::shared_ptr<const CompositionIndex> index_;
  std::shared_ptr<const std::vector<FwValue>> values_;
};

// Tabulates g over all vectors indexed by `index`.
CombFunctional tabulate(const CombFunctional& g,
                        std::shared_ptr<const CompositionIndex> index);

// Real-valued function of probability laws: the per-variable content of a
// degree-1 additive cochain.
class ProbFunctional {
 public:
  enum class Kind { Constant, Entropy, HashRandom };

  static ProbFunctional constant(double c);
  static ProbFunctional shannon_like(double alpha);
  // Deterministic pseudo-random values in [0, 1): a reproducible stand-in
  // for an arbitrary table over whatever exact laws a scan visits.
  static ProbFunctional hash_random(std::uint64_t seed);

  Kind kind() const { return kind_; }
  double order() const { return alpha_; }

  double eval(const std::vector<Rational>& weights) const;

 private:
  ProbFunctional() = default;
  Kind kind_ = Kind::Constant;
  double c_ = 0.0;
  double alpha_ = 1.0;
  std::uint64_t seed_ = 0;
};

// (Y.g)(nu) = prod over Y-outcomes y with mass, of g(nu restricted to y).
// Throws NotCoarser unless nu's variable refines Y.
FwValue act_mult(const Structure& s, int coarser,
                 const std::function<FwValue(const CountingFunction&)>& g,
                 const CountingFunction& nu);

FwValue act_mult(const Structure& s, int coarser, const CombFunctional& g,
                 const CountingFunction& nu);

// (Y.f)(p) = sum over Y-outcomes y with mass m_y != 0 of m_y^alpha f(p | y).
double act_alpha(const Structure& s, int coarser, double alpha,
                 const std::function<double(const ProbabilityLaw&)>& f,
                 const ProbabilityLaw& p);

}  // namespace infocoh
