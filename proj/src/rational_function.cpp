#include "qshuffle/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace qshuffle {

namespace {

BigInt integer_content(const LaurentPolynomial& p) {
  BigInt g;
  for (const auto& [e, c] : p.coeffs()) {
    (void)e;
    g = BigInt::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPolynomial divide_by_content(const LaurentPolynomial& p, const BigInt& g) {
  if (g.is_one()) return p;
  LaurentPolynomial out;
  for (const auto& [e, c] : p.coeffs()) {
    out += LaurentPolynomial::monomial(e, c / g);
  }
  return out;
}

/// Shift to an ordinary polynomial, divide by integer content, make the
/// leading coefficient positive.
LaurentPolynomial primitive_part(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial out = divide_by_content(p.shifted(-p.min_exponent()), integer_content(p));
  if (out.coeffs().rbegin()->second.is_negative()) out = -out;
  return out;
}

/// Pseudo-remainder of a by b (b nonzero, deg a >= deg b not required); stays
/// in Z[q] by scaling with the leading coefficient of b at every step.
LaurentPolynomial pseudo_remainder(LaurentPolynomial a, const LaurentPolynomial& b) {
  const int bdeg = b.max_exponent();
  const LaurentPolynomial lead{b.coeffs().rbegin()->second};
  while (!a.is_zero() && a.max_exponent() >= bdeg) {
    LaurentPolynomial top =
        LaurentPolynomial::monomial(a.max_exponent() - bdeg, a.coeffs().rbegin()->second);
    a = lead * a - top * b;
  }
  return a;
}

}  // namespace

LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial x = primitive_part(a);
  LaurentPolynomial y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  // A single-term polynomial here is a unit constant, so the gcd is 1.
  if (x.coeffs().size() == 1 || y.coeffs().size() == 1) return LaurentPolynomial{1};
  if (x.max_exponent() < y.max_exponent()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPolynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

RationalFunction::RationalFunction(LaurentPolynomial numerator,
                                   LaurentPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RationalFunction::RationalFunction(const Rational& value)
    : num_(value.num()), den_(value.den()) {}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPolynomial{1};
    return;
  }
  int unit = num_.min_exponent() - den_.min_exponent();
  LaurentPolynomial n = num_.shifted(-num_.min_exponent());
  LaurentPolynomial d = den_.shifted(-den_.min_exponent());
  LaurentPolynomial g = poly_gcd(n, d);
  if (!g.is_one()) {
    n = poly_divide_exact(n, g);
    d = poly_divide_exact(d, g);
  }
  BigInt c = BigInt::gcd(integer_content(n), integer_content(d));
  if (!c.is_one()) {
    n = divide_by_content(n, c);
    d = divide_by_content(d, c);
  }
  if (d.coeffs().begin()->second.is_negative()) {
    n = -n;
    d = -d;
  }
  num_ = n.shifted(unit);
  den_ = std::move(d);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  normalize();
  return *this;
}

}  // namespace qshuffle
