#pragma once

#include <compare>
#include <map>
#include <string>

#include "qshuffle/bigint.hpp"
#include "qshuffle/words.hpp"

namespace qshuffle {

/// Index of the braiding indeterminate q_{x,y}.
struct QVar {
  Letter x = 0;
  Letter y = 0;
  auto operator<=>(const QVar&) const = default;
};

/// Product of q_{x,y} indeterminates with integer exponents; sparse map with
/// no zero exponents. The empty map is the unit monomial.
class QMonomial {
 public:
  QMonomial() = default;
  static QMonomial variable(Letter x, Letter y, int exponent = 1);

  const std::map<QVar, int>& exponents() const { return exps_; }
  bool is_unit() const { return exps_.empty(); }
  int exponent(QVar v) const;

  QMonomial operator*(const QMonomial& rhs) const;

  bool operator==(const QMonomial& rhs) const = default;
  std::strong_ordering operator<=>(const QMonomial& rhs) const;

 private:
  std::map<QVar, int> exps_;
};

/// Polynomial in the commuting q_{x,y} indeterminates with integer
/// coefficients, canonical (no zero terms).
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long long constant);
  QPolynomial(BigInt constant);
  static QPolynomial variable(Letter x, Letter y, int exponent = 1);
  static QPolynomial term(QMonomial m, BigInt coefficient);

  const std::map<QMonomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  BigInt coefficient(const QMonomial& m) const;

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);

  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);

  bool operator==(const QPolynomial& rhs) const = default;

 private:
  std::map<QMonomial, BigInt> terms_;

  void add_term(const QMonomial& m, const BigInt& c);
};

}  // namespace qshuffle
