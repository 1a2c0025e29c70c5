#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bspline {

/// Exact rational scalar with arbitrary-precision numerator and denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "p/q", or a decimal literal such as "-1.25e-3" into an exact rational.
/// Throws InvalidArgument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// The rational whose decimal expansion is the shortest string that round-trips to `value`.
/// 0.1 maps to 1/10, not to the binary fraction nearest 0.1.
Rational rational_from_double(double value);

bool is_integer(const Rational& value);

BigInt factorial(int n);

} // namespace bspline
