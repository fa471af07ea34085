#pragma once

#include <map>
#include <string>

#include "qshuffle/bigint.hpp"
#include "qshuffle/rational.hpp"

namespace qshuffle {

/// Univariate Laurent polynomial in q with integer coefficients; sparse map
/// exponent -> coefficient, canonical (no zero coefficients).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long long constant);
  LaurentPolynomial(BigInt constant);
  /// c * q^e
  static LaurentPolynomial monomial(int exponent, BigInt coefficient = BigInt{1});
  static LaurentPolynomial q_power(int exponent) { return monomial(exponent); }

  const std::map<int, BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  BigInt coefficient(int exponent) const;
  int min_exponent() const;  // throws std::domain_error when zero
  int max_exponent() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs += rhs;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs,
                                     const LaurentPolynomial& rhs);

  /// Multiplies by q^shift.
  LaurentPolynomial shifted(int shift) const;
  /// Substitutes q -> q^scale (scale != 0).
  LaurentPolynomial exponents_scaled(int scale) const;
  /// Exact evaluation at a nonzero rational point.
  Rational evaluate(const Rational& q) const;

  bool operator==(const LaurentPolynomial& rhs) const = default;

 private:
  std::map<int, BigInt> coeffs_;

  void add_term(int exponent, const BigInt& c);

  friend LaurentPolynomial poly_divide_exact(const LaurentPolynomial&,
                                             const LaurentPolynomial&);
};

/// Exact division; throws std::domain_error when the division leaves a
/// remainder (as Laurent polynomials, so units q^k always divide out).
LaurentPolynomial poly_divide_exact(const LaurentPolynomial& dividend,
                                    const LaurentPolynomial& divisor);

/// The l-th cyclotomic polynomial, computed by dividing q^l - 1 by all proper
/// cyclotomic divisors; cached for l up to 64, computed on demand beyond.
LaurentPolynomial cyclotomic(std::uint32_t l);

/// True iff p vanishes at every primitive l-th root of unity: after clearing
/// the Laurent denominator by the minimal power of q, the remainder modulo
/// the l-th cyclotomic polynomial is zero. Requires l >= 2.
bool vanishes_at_root_of_unity(const LaurentPolynomial& p, std::uint32_t l);

}  // namespace qshuffle
