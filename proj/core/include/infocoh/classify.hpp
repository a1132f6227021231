#pragma once

#include <vector>

#include "infocoh/admissible.hpp"
#include "infocoh/cochain.hpp"
#include "infocoh/nondegenerate.hpp"
#include "infocoh/structure.hpp"

namespace infocoh {

// Reads the admissible sequence of a degree-1 multiplicative cocycle off a
// certified product: two-point tables of psi[X] and psi[Y] along the first
// two enumerated outcomes feed the functional-equation solver, and the
// recovered coefficients are checked against psi on X, Y and XY up to
// `bound`. Throws NotACocycle when the tables fail the equation or the
// reconstruction disagrees, DegenerateProduct when a factor has fewer than
// two outcomes.
AdmissibleSequence extract_sequence(const Structure& s, const CombCochain& psi,
                                    int x, int y, const NondegWitness& w,
                                    long long bound, double log_tol = 1e-9);

// Finds the witness itself; DegenerateProduct when none exists,
// MissingProduct when the product is undeclared.
AdmissibleSequence extract_sequence(const Structure& s, const CombCochain& psi,
                                    int x, int y, long long bound,
                                    double log_tol = 1e-9);

struct ComponentClass {
  std::vector<int> members;  // variable indices, ascending
  int x = -1;                // certified product used for extraction
  int y = -1;
  NondegWitness witness;
  AdmissibleSequence d = AdmissibleSequence::ones();
};

struct ClassifyResult {
  std::vector<ComponentClass> components;
  // Cocycles are cohomologically trivial iff every component reads off the
  // same sequence; a single component is always a coboundary.
  bool coboundary = false;
};

// D_n agreement for n = 1..upto; exact sequences compare exactly, anything
// else in log domain within log_tol.
bool same_sequence_prefix(const AdmissibleSequence& a,
                          const AdmissibleSequence& b, long long upto,
                          double log_tol = 1e-9);

// Per connected component of the variable poset: the first product (in
// canonical order) admitting a witness is used to extract that component's
// sequence. NoNondegenerateProduct when a component has none.
ClassifyResult classify_cocycle(const Structure& s, const CombCochain& psi,
                                long long bound, double log_tol = 1e-9);

}  // namespace infocoh
