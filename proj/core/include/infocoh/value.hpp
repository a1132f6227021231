#pragma once

#include "infocoh/rational.hpp"

#include <string>

namespace infocoh {

/// Positive quantity carried either as an exact rational or in log domain.
/// Products of mixed representations fall back to log domain; exactness is
/// preserved whenever both operands are exact.
class CoefficientValue {
 public:
  CoefficientValue() : exact_(true), q_(1), log_(0.0) {}

  static CoefficientValue exact(Rational q);
  static CoefficientValue from_log(double natural_log);

  bool is_exact() const { return exact_; }

  /// Only valid for exact values.
  const Rational& rational() const;

  /// ln of the value; computed on demand for exact values.
  double log() const;

  double to_double() const;

  CoefficientValue operator*(const CoefficientValue& o) const;
  CoefficientValue operator/(const CoefficientValue& o) const;
  CoefficientValue inverse() const;
  CoefficientValue pow(long long e) const;
  CoefficientValue pow_real(double r) const;

  /// Exact values compare as rationals; once log domain is involved the
  /// comparison is |delta log| <= log_tol (the default demands bit equality).
  bool same_value(const CoefficientValue& o, double log_tol = 0.0) const;
  bool is_one(double log_tol = 0.0) const;

  /// "35", "3/7" or "exp(-2.07889)" for log-domain values.
  std::string str() const;

 private:
  bool exact_;
  Rational q_;
  double log_;
};

using FwValue = CoefficientValue;

}  // namespace infocoh
