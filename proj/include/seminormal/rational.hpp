#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace seminormal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored with gcd(|num|, den) = 1 and den >= 1.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den with sign normalization; throws std::domain_error on den = 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// a^e for possibly negative e; throws std::domain_error on 0^negative.
Rational rational_pow(const Rational& a, long e);

/// Canonical text form: "3", "-3/2".
std::string rational_str(const Rational& a);

/// Parses "3", "-3/2"; whole input must be consumed. Throws ParseError.
Rational parse_rational(std::string_view text);

} // namespace seminormal
