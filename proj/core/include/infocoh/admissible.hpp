#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infocoh/rational.hpp"
#include "infocoh/value.hpp"

namespace infocoh {

// A positive sequence D with D_1 = 1, defining generalized factorials
// [n]! = D_n ... D_1 and the multinomial coefficients built from them.
// Rational-valued kinds evaluate exactly; the rest live in log domain.
// Evaluation is lazily memoized and safe for concurrent callers.
class AdmissibleSequence {
 public:
  enum class Kind {
    Natural,     // D_n = n
    Gaussian,    // D_n = (q^n - 1)/(q - 1)
    Fibonacci,   // D_n = F_n with F_1 = F_2 = 1
    AlphaFamily, // ln D_n = K (n^{alpha-1} - 1)
    Explicit,    // finite list of positive rationals
    ExplicitLog, // finite list of ln D_n
    Ones,        // D_n = 1
  };

  static AdmissibleSequence natural();
  // q > 0, q != 1 (otherwise DomainViolation).
  static AdmissibleSequence gaussian(Rational q);
  static AdmissibleSequence fibonacci();
  // alpha > 0, alpha != 1 (otherwise DomainViolation).
  static AdmissibleSequence alpha_family(double k, double alpha);
  // values[0] is D_1 and must equal 1; all entries positive.
  static AdmissibleSequence explicit_values(std::vector<Rational> values);
  // logs[0] is ln D_1 and must equal 0; entries finite.
  static AdmissibleSequence explicit_logs(std::vector<double> logs);
  static AdmissibleSequence ones();

  Kind kind() const { return kind_; }
  // True when every D_n is an exact rational.
  bool is_exact() const;
  // Largest n with D_n defined, or nullopt when unbounded.
  std::optional<long long> length() const;

  const Rational& gaussian_q() const { return q_; }
  double alpha_k() const { return k_; }
  double alpha_order() const { return alpha_; }

  // D_n for n >= 1. Throws OutOfRange past the end of an explicit kind,
  // DomainViolation for d_exact on a log-domain kind.
  Rational d_exact(long long n) const;
  double d_log(long long n) const;
  FwValue d(long long n) const;

  // [n]! for n >= 0.
  Rational factorial_exact(long long n) const;
  double factorial_log(long long n) const;
  FwValue factorial(long long n) const;

  // Round-trippable family tag, e.g. "natural", "gaussian:q=2",
  // "alpha:K=1,alpha=0.5", "explicit:1,2,3".
  std::string tag() const;

 private:
  AdmissibleSequence() = default;

  Kind kind_ = Kind::Natural;
  Rational q_;
  double k_ = 0.0;
  double alpha_ = 0.0;
  std::vector<Rational> values_;
  std::vector<double> logs_;

  // caches[n] = [n]!; grown under lock, shared across copies.
  struct Memo {
    std::mutex m;
    std::vector<Rational> fact{Rational(1)};
    std::vector<double> logfact{0.0};
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();

  Rational d_exact_raw(long long n) const;
  double d_log_raw(long long n) const;
};

// Parses a family tag as produced by AdmissibleSequence::tag().
// Accepted: natural | fibonacci | ones | gaussian:q=R |
// alpha:K=F,alpha=F | explicit:R,R,... | explicitlog:F,F,...
// Throws UnsupportedFamily on anything else.
AdmissibleSequence parse_family(const std::string& tag);

// [sum parts]! / prod [part]!. Parts must be nonnegative with positive sum
// (AllZeroParts otherwise); zero parts and order do not affect the value.
FwValue fw_multinomial(const AdmissibleSequence& d,
                       std::span<const long long> parts);

// Convenience binomial: parts (k, n-k).
FwValue fw_binomial(const AdmissibleSequence& d, long long n, long long k);

// ln of the coefficient, usable for any kind; what the growth-rate
// estimators call to avoid huge exact intermediates.
double fw_multinomial_log(const AdmissibleSequence& d,
                          std::span<const long long> parts);

// Both sides of the additive two-term recurrence
// C(n,k) - C(n-1,k) = C(n-1,k-1) (D_n - D_{n-k}) / D_k, for 1 <= k <= n-1.
// Exact kinds report the literal difference; log kinds only the relative
// deviation |lhs-rhs| / max(|lhs|, |rhs|, 1).
struct PascalResidual {
  std::optional<Rational> exact;
  double relative = 0.0;
};
PascalResidual pascal_residual(const AdmissibleSequence& d, long long n,
                               long long k);

// W(parts) / ( W(group sums) * prod_g W(parts within group g) ).
// `grouping[i]` is the group of part i; groups must be exactly 0..G-1
// (InvalidGrouping otherwise). Identically 1 for every admissible sequence.
FwValue grouping_identity_ratio(const AdmissibleSequence& d,
                                std::span<const long long> parts,
                                std::span<const int> grouping);

// Two-argument coefficient table f(n1, n2) for n1 + n2 <= limit.
struct BinomialTable {
  long long limit = 0;
  std::map<std::pair<long long, long long>, FwValue> entries;

  const FwValue& at(long long n1, long long n2) const;
  bool has(long long n1, long long n2) const;
};

BinomialTable fw_binomial_table(const AdmissibleSequence& d, long long limit);

// Recovers D_n from the n1 = 1 column ([n]!/[n-1]! = D_n), then demands the
// whole table equal the coefficients of the recovered sequence
// (InconsistentTable otherwise; log-domain entries compared within log_tol).
// Returns an Explicit prefix when every entry is exact, else ExplicitLog.
AdmissibleSequence sequence_from_binomials(const BinomialTable& table,
                                           double log_tol = 1e-9);

}  // namespace infocoh
