#pragma once

#include <string>

#include "qshuffle/laurent.hpp"

namespace qshuffle {

/// Rational function in q, stored as a reduced fraction of integer Laurent
/// polynomials. Canonical form: the denominator is an ordinary polynomial
/// with nonzero positive constant term, the fraction is reduced by the
/// polynomial GCD, and the integer content of numerator and denominator is
/// coprime. Any q^k unit lives in the numerator.
class RationalFunction {
 public:
  RationalFunction() : num_{}, den_{1} {}
  RationalFunction(long long constant) : num_{constant}, den_{1} {}
  RationalFunction(LaurentPolynomial numerator) : num_(std::move(numerator)), den_{1} {}
  RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator);
  RationalFunction(const Rational& value);

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) {
    return lhs += rhs;
  }
  friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) {
    return lhs -= rhs;
  }
  friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) {
    return lhs *= rhs;
  }
  friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) {
    return lhs /= rhs;
  }

  bool operator==(const RationalFunction& rhs) const = default;

 private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;

  void normalize();
};

/// GCD of two integer Laurent polynomials up to units: the result is an
/// ordinary primitive polynomial with positive leading coefficient (1 for
/// coprime inputs; gcd(p, 0) = normalized p).
LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace qshuffle
