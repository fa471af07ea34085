#include "qshuffle/laurent.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qshuffle {

LaurentPolynomial::LaurentPolynomial(long long constant) {
  if (constant != 0) coeffs_[0] = BigInt{constant};
}

LaurentPolynomial::LaurentPolynomial(BigInt constant) {
  if (!constant.is_zero()) coeffs_[0] = std::move(constant);
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, BigInt coefficient) {
  LaurentPolynomial out;
  if (!coefficient.is_zero()) out.coeffs_[exponent] = std::move(coefficient);
  return out;
}

bool LaurentPolynomial::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second.is_one();
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt{} : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

void LaurentPolynomial::add_term(int exponent, const BigInt& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(exponent);
  if (it == coeffs_.end()) {
    coeffs_.emplace(exponent, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  LaurentPolynomial out;
  for (const auto& [el, cl] : lhs.coeffs_) {
    for (const auto& [er, cr] : rhs.coeffs_) {
      out.add_term(el + er, cl * cr);
    }
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(int shift) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + shift, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::exponents_scaled(int scale) const {
  if (scale == 0) throw std::invalid_argument("exponent scale must be nonzero");
  LaurentPolynomial out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e * scale, c);
  return out;
}

Rational LaurentPolynomial::evaluate(const Rational& q) const {
  if (q.is_zero()) throw std::domain_error("Laurent polynomial evaluated at zero");
  Rational out;
  for (const auto& [e, c] : coeffs_) {
    out += Rational(c) * q.pow(e);
  }
  return out;
}

LaurentPolynomial poly_divide_exact(const LaurentPolynomial& dividend,
                                    const LaurentPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (dividend.is_zero()) return {};
  // Units q^k divide out: normalize both operands to start at exponent 0 and
  // restore the exponent offset at the end.
  int offset = dividend.min_exponent() - divisor.min_exponent();
  LaurentPolynomial rem = dividend.shifted(-dividend.min_exponent());
  LaurentPolynomial den = divisor.shifted(-divisor.min_exponent());
  const int ddeg = den.max_exponent();
  const BigInt& lead = den.coeffs().rbegin()->second;
  LaurentPolynomial quot;
  while (!rem.is_zero() && rem.max_exponent() >= ddeg) {
    BigInt q, r;
    BigInt::divmod(rem.coeffs().rbegin()->second, lead, q, r);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    int shift = rem.max_exponent() - ddeg;
    LaurentPolynomial t = LaurentPolynomial::monomial(shift, q);
    quot += t;
    rem -= t * den;
  }
  if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
  return quot.shifted(offset);
}

namespace {

/// Remainder of p (an ordinary polynomial, min exponent >= 0) modulo a monic
/// integer polynomial m; stays in Z[q].
LaurentPolynomial poly_mod_monic(LaurentPolynomial p, const LaurentPolynomial& m) {
  const int mdeg = m.max_exponent();
  while (!p.is_zero() && p.max_exponent() >= mdeg) {
    int shift = p.max_exponent() - mdeg;
    BigInt lead = p.coeffs().rbegin()->second;
    p -= m.shifted(shift) * LaurentPolynomial(lead);
  }
  return p;
}

}  // namespace

namespace {

// q^n - 1 divided by all proper cyclotomic factors.
LaurentPolynomial cyclotomic_by_division(std::uint32_t n) {
  LaurentPolynomial phi =
      LaurentPolynomial::q_power(static_cast<int>(n)) - LaurentPolynomial(1);
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) phi = poly_divide_exact(phi, cyclotomic(d));
  }
  return phi;
}

}  // namespace

LaurentPolynomial cyclotomic(std::uint32_t l) {
  constexpr std::uint32_t kMaxCached = 64;
  if (l < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  if (l > kMaxCached) return cyclotomic_by_division(l);
  static std::vector<LaurentPolynomial> cache;
  static std::once_flag once;
  std::call_once(once, [] {
    cache.resize(kMaxCached + 1);
    for (std::uint32_t n = 1; n <= kMaxCached; ++n) {
      LaurentPolynomial phi =
          LaurentPolynomial::q_power(static_cast<int>(n)) - LaurentPolynomial(1);
      for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d == 0) phi = poly_divide_exact(phi, cache[d]);
      }
      cache[n] = std::move(phi);
    }
  });
  return cache[l];
}

bool vanishes_at_root_of_unity(const LaurentPolynomial& p, std::uint32_t l) {
  if (l < 2) throw std::invalid_argument("root-of-unity order must be >= 2");
  if (p.is_zero()) return true;
  LaurentPolynomial cleared = p.shifted(-p.min_exponent());
  return poly_mod_monic(std::move(cleared), cyclotomic(l)).is_zero();
}

}  // namespace qshuffle
