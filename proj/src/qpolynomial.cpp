#include "qshuffle/qpolynomial.hpp"

namespace qshuffle {

QMonomial QMonomial::variable(Letter x, Letter y, int exponent) {
  QMonomial out;
  if (exponent != 0) out.exps_[{x, y}] = exponent;
  return out;
}

int QMonomial::exponent(QVar v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

QMonomial QMonomial::operator*(const QMonomial& rhs) const {
  QMonomial out = *this;
  for (const auto& [v, e] : rhs.exps_) {
    int total = (out.exps_.count(v) ? out.exps_[v] : 0) + e;
    if (total == 0) {
      out.exps_.erase(v);
    } else {
      out.exps_[v] = total;
    }
  }
  return out;
}

std::strong_ordering QMonomial::operator<=>(const QMonomial& rhs) const {
  auto lhs_it = exps_.begin();
  auto rhs_it = rhs.exps_.begin();
  while (lhs_it != exps_.end() && rhs_it != rhs.exps_.end()) {
    if (auto c = lhs_it->first <=> rhs_it->first; c != 0) return c;
    if (auto c = lhs_it->second <=> rhs_it->second; c != 0) return c;
    ++lhs_it;
    ++rhs_it;
  }
  if (lhs_it != exps_.end()) return std::strong_ordering::greater;
  if (rhs_it != rhs.exps_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

QPolynomial::QPolynomial(long long constant) {
  if (constant != 0) terms_[QMonomial{}] = BigInt{constant};
}

QPolynomial::QPolynomial(BigInt constant) {
  if (!constant.is_zero()) terms_[QMonomial{}] = std::move(constant);
}

QPolynomial QPolynomial::variable(Letter x, Letter y, int exponent) {
  QPolynomial out;
  out.terms_[QMonomial::variable(x, y, exponent)] = BigInt{1};
  return out;
}

QPolynomial QPolynomial::term(QMonomial m, BigInt coefficient) {
  QPolynomial out;
  if (!coefficient.is_zero()) out.terms_[std::move(m)] = std::move(coefficient);
  return out;
}

bool QPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
         terms_.begin()->second.is_one();
}

BigInt QPolynomial::coefficient(const QMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt{} : it->second;
}

void QPolynomial::add_term(const QMonomial& m, const BigInt& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  QPolynomial out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      out.add_term(ml * mr, cl * cr);
    }
  }
  return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

}  // namespace qshuffle
