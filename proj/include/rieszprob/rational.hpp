#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rieszprob {

using Integer = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always stored in lowest terms with
/// positive denominator; every arithmetic operation is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" with optional leading minus. Decimal notation is
/// rejected with a hint to use the fraction form. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q" (denominator omitted when 1).
std::string to_string(const Rational& r);

}  // namespace rieszprob
