#include "qshuffle/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qshuffle {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
  negative_ = value < 0;
  // Avoid overflow on LLONG_MIN by widening before negation.
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  BigInt out;
  std::size_t pos = 0;
  bool neg = false;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("integer literal has no digits");
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid digit in integer literal");
    out.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
  }
  out.negative_ = neg && !out.limbs_.empty();
  return out;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

std::strong_ordering BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
    carry = sum >> 32;
  }
  if (carry != 0) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(diff));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.negative_ = !out.negative_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.negative_ = false;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (negative_ == rhs.negative_) {
    limbs_ = add_magnitude(limbs_, rhs.limbs_);
  } else {
    auto cmp = compare_magnitude(*this, rhs);
    if (cmp == std::strong_ordering::equal) {
      limbs_.clear();
      negative_ = false;
    } else if (cmp == std::strong_ordering::greater) {
      limbs_ = sub_magnitude(limbs_, rhs.limbs_);
    } else {
      limbs_ = sub_magnitude(rhs.limbs_, limbs_);
      negative_ = rhs.negative_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(lhs.limbs_[i]) * rhs.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  out.negative_ = lhs.negative_ != rhs.negative_;
  out.trim();
  return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  *this = *this * rhs;
  return *this;
}

void BigInt::divmod(const BigInt& dividend, const BigInt& divisor,
                    BigInt& quotient, BigInt& remainder) {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  auto cmp = compare_magnitude(dividend, divisor);
  if (cmp == std::strong_ordering::less) {
    remainder = dividend;
    quotient = BigInt{};
    return;
  }

  // Bit-by-bit long division over magnitudes; ample for the coefficient
  // sizes this library produces.
  BigInt rem;
  BigInt quot;
  quot.limbs_.assign(dividend.limbs_.size(), 0);
  for (std::size_t bit = dividend.limbs_.size() * 32; bit-- > 0;) {
    // rem = rem * 2 + bit(dividend, bit)
    std::uint32_t carry = (dividend.limbs_[bit / 32] >> (bit % 32)) & 1u;
    for (std::size_t i = 0; i < rem.limbs_.size(); ++i) {
      std::uint32_t next = rem.limbs_[i] >> 31;
      rem.limbs_[i] = (rem.limbs_[i] << 1) | carry;
      carry = next;
    }
    if (carry != 0) rem.limbs_.push_back(carry);
    if (compare_magnitude(rem, divisor) != std::strong_ordering::less) {
      rem.limbs_ = sub_magnitude(rem.limbs_, divisor.limbs_);
      quot.limbs_[bit / 32] |= 1u << (bit % 32);
    }
  }
  quot.trim();
  rem.trim();
  quot.negative_ = !quot.is_zero() && (dividend.negative_ != divisor.negative_);
  rem.negative_ = !rem.is_zero() && dividend.negative_;
  quotient = std::move(quot);
  remainder = std::move(rem);
}

BigInt BigInt::operator/(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::pow(std::uint32_t exponent) const {
  BigInt base = *this;
  BigInt out{1};
  while (exponent != 0) {
    if (exponent & 1u) out *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (negative_ != rhs.negative_)
    return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  auto mag = compare_magnitude(*this, rhs);
  return negative_ ? (0 <=> mag) : mag;
}

void BigInt::mul_small_add(std::uint32_t factor, std::uint32_t addend) {
  std::uint64_t carry = addend;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
}

std::uint32_t BigInt::divmod_small(std::uint32_t divisor) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt tmp = *this;
  std::vector<std::string> blocks;  // base-10^9 blocks, least significant first
  while (!tmp.is_zero()) {
    blocks.push_back(std::to_string(tmp.divmod_small(1000000000u)));
  }
  std::string out = negative_ ? "-" : "";
  for (std::size_t i = blocks.size(); i-- > 0;) {
    if (i + 1 == blocks.size()) {
      out += blocks[i];
    } else {
      out += std::string(9 - blocks[i].size(), '0') + blocks[i];
    }
  }
  return out;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() < 2) return true;
  if (limbs_.size() > 2) return false;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64");
  std::uint64_t mag = 0;
  if (limbs_.size() >= 1) mag |= limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return negative_ ? -static_cast<long long>(mag - 1) - 1
                   : static_cast<long long>(mag);
}

double BigInt::to_double() const {
  double mag = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    mag = mag * 4294967296.0 + static_cast<double>(limbs_[i]);
  }
  return negative_ ? -mag : mag;
}

}  // namespace qshuffle
