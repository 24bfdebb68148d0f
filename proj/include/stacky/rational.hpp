#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stacky {

// All core arithmetic is exact. Rationals are kept in lowest terms with a
// positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den in lowest terms for any nonzero den; the two-argument Rational
// constructor itself rejects negative denominators.
Rational make_ratio(Int num, Int den);

// floor(a/b), b > 0. Plain cpp_int division truncates toward zero.
Int floor_div(const Int& a, const Int& b);

Int floor_rat(const Rational& q);

// Smallest integer strictly greater than q, i.e. floor(q) + 1.
Int smallest_int_greater(const Rational& q);

int sign_of(const Int& x);

// "p/q" with no spaces, "n" when the denominator is 1; sign on the
// numerator only.
std::string render_rational(const Rational& q);

std::string render_int(const Int& x);

} // namespace stacky
