#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "qshuffle/bigint.hpp"

namespace qshuffle {

/// Exact rational number. Always reduced, denominator always positive.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  /// Parses "a", "-a", or "a/b".
  static Rational from_string(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  /// Negative exponents invert; 0^negative throws std::domain_error.
  Rational pow(int exponent) const;

  bool operator==(const Rational& rhs) const = default;
  std::strong_ordering operator<=>(const Rational& rhs) const;

  std::string to_string() const;
  double to_double() const;

 private:
  BigInt num_;
  BigInt den_;

  void normalize();
};

}  // namespace qshuffle
