#include "infocoh/rational.hpp"

#include "infocoh/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>

namespace infocoh {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_unsigned(std::string_view s) {
  Integer v = 0;
  for (char c : s) {
    v *= 10;
    v += (c - '0');
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(Errc::ParseError, "bad rational literal '" + std::string(text) + "'");
    Integer d = parse_unsigned(den);
    if (d == 0)
      fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(parse_unsigned(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      fail(Errc::ParseError, "bad decimal literal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = (whole.empty() ? Integer(0) : parse_unsigned(whole)) * scale +
                  (frac.empty() ? Integer(0) : parse_unsigned(frac));
    value = Rational(num, scale);
  } else {
    if (!all_digits(s))
      fail(Errc::ParseError, "bad number '" + std::string(text) + "'");
    value = Rational(parse_unsigned(s));
  }
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

double log_integer(const Integer& n) {
  if (n <= 0) fail(Errc::DomainViolation, "log of non-positive integer");
  // Split off high bits so huge integers never overflow the double range.
  std::size_t bits = boost::multiprecision::msb(n);
  if (bits <= 900) return std::log(n.convert_to<double>());
  std::size_t shift = bits - 52;
  Integer top = n >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

double log_rational(const Rational& q) {
  if (q <= 0) fail(Errc::DomainViolation, "log of non-positive rational");
  return log_integer(numerator(q)) - log_integer(denominator(q));
}

Rational rational_pow(const Rational& base, long long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0)
    fail(Errc::DomainViolation, "zero base with negative exponent");
  bool invert = exp < 0;
  unsigned long long e = invert ? static_cast<unsigned long long>(-exp)
                                : static_cast<unsigned long long>(exp);
  Rational acc(1), b = base;
  while (e > 0) {
    if (e & 1ULL) acc *= b;
    b *= b;
    e >>= 1;
  }
  if (invert) acc = Rational(1) / acc;
  return acc;
}

}  // namespace infocoh
