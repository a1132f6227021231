#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace infocoh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "3", "-2/7" and decimal literals like "0.25" (exact, via a
/// power-of-ten denominator).  Throws Errc::ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical form: integers without a slash, otherwise "p/q" fully reduced.
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

/// Natural logarithm of a positive rational; safe for values whose
/// numerator/denominator exceed the double range.
double log_rational(const Rational& q);

double log_integer(const Integer& n);

/// base^exp with exp possibly negative (then base must be nonzero).
Rational rational_pow(const Rational& base, long long exp);

}  // namespace infocoh
