#include "infocoh/value.hpp"

#include "infocoh/errors.hpp"

#include <cmath>
#include <sstream>

namespace infocoh {

CoefficientValue CoefficientValue::exact(Rational q) {
  if (q <= 0) fail(Errc::DomainViolation, "coefficient values must be positive");
  CoefficientValue v;
  v.exact_ = true;
  v.q_ = std::move(q);
  v.log_ = 0.0;
  return v;
}

CoefficientValue CoefficientValue::from_log(double natural_log) {
  CoefficientValue v;
  v.exact_ = false;
  v.q_ = 0;
  v.log_ = natural_log;
  return v;
}

const Rational& CoefficientValue::rational() const {
  if (!exact_) fail(Errc::DomainViolation, "value is not exact");
  return q_;
}

double CoefficientValue::log() const {
  return exact_ ? log_rational(q_) : log_;
}

double CoefficientValue::to_double() const {
  return exact_ ? infocoh::to_double(q_) : std::exp(log_);
}

CoefficientValue CoefficientValue::operator*(const CoefficientValue& o) const {
  if (exact_ && o.exact_) return exact(q_ * o.q_);
  return from_log(log() + o.log());
}

CoefficientValue CoefficientValue::operator/(const CoefficientValue& o) const {
  if (exact_ && o.exact_) return exact(q_ / o.q_);
  return from_log(log() - o.log());
}

CoefficientValue CoefficientValue::inverse() const {
  if (exact_) return exact(Rational(1) / q_);
  return from_log(-log_);
}

CoefficientValue CoefficientValue::pow(long long e) const {
  if (exact_) return exact(rational_pow(q_, e));
  return from_log(log_ * static_cast<double>(e));
}

CoefficientValue CoefficientValue::pow_real(double r) const {
  return from_log(log() * r);
}

bool CoefficientValue::same_value(const CoefficientValue& o, double log_tol) const {
  if (exact_ && o.exact_) return q_ == o.q_;
  return std::abs(log() - o.log()) <= log_tol;
}

bool CoefficientValue::is_one(double log_tol) const {
  if (exact_) return q_ == 1;
  return std::abs(log_) <= log_tol;
}

std::string CoefficientValue::str() const {
  if (exact_) return format_rational(q_);
  std::ostringstream os;
  os << "exp(" << log_ << ")";
  return os.str();
}

}  // namespace infocoh
