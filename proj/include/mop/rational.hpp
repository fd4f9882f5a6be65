#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace mop {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// "n" or "n/d" in lowest terms with d > 0.
std::string to_string(const Rational& value);

// Accepts an optional sign followed by "n" or "n/d" in decimal. No floats.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

}  // namespace mop
