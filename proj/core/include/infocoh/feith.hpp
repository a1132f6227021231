#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infocoh/admissible.hpp"

namespace infocoh {

// Outcome of solving the two-unknown recurrence system
//   f1(n0+n2, n1) f2(n0, n2) = f2(n0+n1, n2) f1(n0, n1)
// with boundary f(n,0) = f(0,n) = 1 over a bounded table domain.
struct FeithResult {
  enum class Status {
    Solved,
    BoundaryViolation,           // some f(n,0) or f(0,n) differs from 1
    SymmetryViolation,           // f(n,1) != f(1,n) within one table
    FunctionalEquationViolation, // the equation fails at `witness`
    InconsistentTable,           // equation holds but f != W_D of recovered D
  };

  Status status = Status::Solved;
  std::optional<AdmissibleSequence> d;
  // (n0, n1, n2) instance at which the equation failed; n0 = 0 entries come
  // from the cross-table comparison f1(n2, n1) = f2(n1, n2).
  std::optional<std::array<long long, 3>> witness;
  std::string message;

  bool solved() const { return status == Status::Solved; }
};

const char* feith_status_name(FeithResult::Status s);

// Checks, in order: boundary rows; the n0 = 0 cross-table identity
// (first failure in (n1, n2) lex order); within-table symmetry on the
// (n,1)/(1,n) diagonal; then every equation instance with n0 >= 1.
// On success recovers D from the (1, n-1) column and verifies both tables
// equal the coefficients of the recovered sequence. Tables must share one
// limit; exact entries compare exactly, log-domain ones within log_tol.
FeithResult comb_feith_solve(const BinomialTable& f1, const BinomialTable& f2,
                             double log_tol = 1e-9);

// One (x, y) evaluation point of the continuous functional equation.
// Kept rational so the quotient arguments y/(1-x), x/(1-y) can be formed
// exactly; rounding them in doubles is ill-conditioned where u has an
// unbounded derivative (the ratios hit 1 on the x + y = 1 edge).
struct FeithGridPoint {
  Rational x;
  Rational y;
};

// Distinct rational points with x, y in (0,1), x + y <= 1, in ascending
// (denominator, numerator) order, exactly `points` of them.
std::vector<FeithGridPoint> feith_grid(int points);

// max over the grid of
// |u(x) + (1-x)^a u(y/(1-x)) - u(y) - (1-y)^a u(x/(1-y))|,
// and of the boundary defect |u(0) - u(1)|. The boundary condition is part
// of the characterization: without it the equation also admits the linear
// map at some orders. Grid points must satisfy x, y in [0,1), x + y <= 1
// (DomainViolation).
double feith_residual_continuous(const std::function<double(double)>& u,
                                 double alpha,
                                 std::span<const FeithGridPoint> grid);

// -x ln x - (1-x) ln(1-x), with 0 ln 0 = 0: the order-1 solution.
double shannon_solution(double x);

// (x^a + (1-x)^a - 1)/(1-a): the order-a solution, a != 1.
double tsallis_solution(double alpha, double x);

}  // namespace infocoh
