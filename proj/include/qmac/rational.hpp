#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qmac {

using Integer = boost::multiprecision::cpp_int;

// Exact rational coefficient field. cpp_rational keeps gcd(|num|,den)=1 and
// den >= 1 canonically, so every value is normalized by construction.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" (q != 0). Throws PreconditionViolated on malformed input.
Rational parse_rational(const std::string& text);

// Canonical "p/q" with the denominator always explicit, e.g. "3/1", "-1/2".
std::string rational_pair_str(const Rational& r);

// Human-friendly form: "3", "-1/2".
std::string rational_str(const Rational& r);

}  // namespace qmac
