#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "exg/errors.hpp"

namespace exg {

// Exact arithmetic for weights, alpha and alpha*.  Only the Lovasz number is
// floating point; everything combinatorial stays rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "-p", "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

// Exact: every finite double is a dyadic rational.
Rational rational_from_double(double x);

}  // namespace exg
