#include "stacky/rational.hpp"

#include <cassert>

namespace stacky {

Rational make_ratio(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

Int floor_div(const Int& a, const Int& b) {
  assert(b > 0);
  Int q = a / b;
  if (a % b != 0 && a < 0) {
    --q;
  }
  return q;
}

Int floor_rat(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

Int smallest_int_greater(const Rational& q) {
  return floor_rat(q) + 1;
}

int sign_of(const Int& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

std::string render_rational(const Rational& q) {
  if (denominator(q) == 1) {
    return numerator(q).str();
  }
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string render_int(const Int& x) {
  return x.str();
}

} // namespace stacky
