#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qshuffle {

/// Signed arbitrary-precision integer. Magnitude is base-2^32, little endian,
/// with no trailing zero limbs; zero is the empty limb vector with positive sign.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);

  static BigInt from_string(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_negative() const { return negative_; }
  int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

  /// Truncated division: quotient rounds toward zero, remainder has the
  /// dividend's sign. Throws std::domain_error when divisor is zero.
  static void divmod(const BigInt& dividend, const BigInt& divisor,
                     BigInt& quotient, BigInt& remainder);
  BigInt operator/(const BigInt& rhs) const;
  BigInt operator%(const BigInt& rhs) const;

  static BigInt gcd(BigInt a, BigInt b);
  BigInt pow(std::uint32_t exponent) const;

  bool operator==(const BigInt& rhs) const = default;
  std::strong_ordering operator<=>(const BigInt& rhs) const;

  std::string to_string() const;
  /// Throws std::overflow_error when the value does not fit.
  long long to_int64() const;
  bool fits_int64() const;
  double to_double() const;

 private:
  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;

  void trim();
  static std::strong_ordering compare_magnitude(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  void mul_small_add(std::uint32_t factor, std::uint32_t addend);
  std::uint32_t divmod_small(std::uint32_t divisor);
};

}  // namespace qshuffle
