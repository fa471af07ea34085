#include "qshuffle/specialization.hpp"

#include <stdexcept>

#include "qshuffle/errors.hpp"

namespace qshuffle {

CartanData::CartanData(std::vector<std::vector<int>> matrix, std::vector<int> symmetrizers)
    : a(std::move(matrix)), d(std::move(symmetrizers)) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("Cartan matrix is empty");
  if (d.size() != n) throw std::invalid_argument("Cartan symmetrizer length mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("Cartan matrix is not square");
    if (a[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    if (d[i] < 1) throw std::invalid_argument("Cartan symmetrizers must be positive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && a[i][j] > 0)
        throw std::invalid_argument("Cartan off-diagonal entries must be <= 0");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i] * a[i][j] != d[j] * a[j][i])
        throw std::invalid_argument("Cartan matrix is not symmetrizable by d");
    }
  }
}

Specialization Specialization::classical() { return Specialization(Kind::Classical); }

Specialization Specialization::cartan(CartanData data) {
  Specialization out(Kind::Cartan);
  out.cartan_ = std::move(data);
  return out;
}

Specialization Specialization::numeric(CartanData data, Rational q) {
  if (q.is_zero()) throw std::invalid_argument("numeric specialization requires q != 0");
  Specialization out(Kind::Numeric);
  out.cartan_ = std::move(data);
  out.q_ = std::move(q);
  return out;
}

Specialization Specialization::symbolic_univariate(std::map<QVar, int> exponent_table) {
  Specialization out(Kind::SymbolicUnivariate);
  out.table_ = std::move(exponent_table);
  return out;
}

const CartanData& Specialization::cartan_data() const {
  if (!cartan_) throw std::logic_error("specialization carries no Cartan data");
  return *cartan_;
}

const Rational& Specialization::q_value() const {
  if (!q_) throw std::logic_error("specialization carries no numeric q");
  return *q_;
}

const std::map<QVar, int>& Specialization::exponent_table() const { return table_; }

int cartan_exponent(Letter x, Letter y, const CartanData& data,
                    const std::map<Letter, std::size_t>& letter_to_index) {
  auto ix = letter_to_index.find(x);
  auto iy = letter_to_index.find(y);
  if (ix == letter_to_index.end() || iy == letter_to_index.end())
    throw BraidingError("letter " + std::to_string(ix == letter_to_index.end() ? x : y) +
                        " has no Cartan row");
  if (ix->second >= data.rank() || iy->second >= data.rank())
    throw BraidingError("letter index exceeds Cartan rank");
  return data.d[ix->second] * data.a[ix->second][iy->second];
}

Rational specialize_classical(const QPolynomial& p) {
  Rational out;
  for (const auto& [m, c] : p.terms()) {
    (void)m;
    out += Rational(c);
  }
  return out;
}

LaurentPolynomial specialize_cartan(const QPolynomial& p, const CartanData& data,
                                    const std::map<Letter, std::size_t>& letter_to_index) {
  LaurentPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    int exponent = 0;
    for (const auto& [v, e] : m.exponents()) {
      exponent += cartan_exponent(v.x, v.y, data, letter_to_index) * e;
    }
    out += LaurentPolynomial::monomial(exponent, c);
  }
  return out;
}

Rational specialize_numeric(const QPolynomial& p, const CartanData& data, const Rational& q,
                            const std::map<Letter, std::size_t>& letter_to_index) {
  if (q.is_zero()) throw BraidingError("numeric specialization requires q != 0");
  return specialize_cartan(p, data, letter_to_index).evaluate(q);
}

LaurentPolynomial specialize_univariate(const QPolynomial& p,
                                        const std::map<QVar, int>& exponent_table) {
  LaurentPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    int exponent = 0;
    for (const auto& [v, e] : m.exponents()) {
      auto it = exponent_table.find(v);
      if (it == exponent_table.end())
        throw BraidingError("no exponent for q[" + std::to_string(v.x) + "," +
                            std::to_string(v.y) + "]");
      exponent += it->second * e;
    }
    out += LaurentPolynomial::monomial(exponent, c);
  }
  return out;
}

SpecializedValue specialize(const QPolynomial& p, const Specialization& spec,
                            const std::map<Letter, std::size_t>& letter_to_index) {
  switch (spec.kind()) {
    case Specialization::Kind::Classical:
      return specialize_classical(p);
    case Specialization::Kind::Cartan:
      return specialize_cartan(p, spec.cartan_data(), letter_to_index);
    case Specialization::Kind::Numeric:
      return specialize_numeric(p, spec.cartan_data(), spec.q_value(), letter_to_index);
    case Specialization::Kind::SymbolicUnivariate:
      return specialize_univariate(p, spec.exponent_table());
  }
  throw std::logic_error("unknown specialization kind");
}

}  // namespace qshuffle
