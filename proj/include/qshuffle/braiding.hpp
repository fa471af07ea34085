#pragma once

#include <map>
#include <string>
#include <utility>

#include "qshuffle/errors.hpp"
#include "qshuffle/qpolynomial.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/rational_function.hpp"
#include "qshuffle/specialization.hpp"
#include "qshuffle/words.hpp"

namespace qshuffle {

// A braiding is any type with
//   using Coeff = <coefficient ring>;
//   Coeff pair(Letter x, Letter y) const;
// returning the scalar picked up when x crosses left-to-right over y. All
// braidings here are diagonal: the crossing swaps the tensor factors and
// multiplies by that scalar.

/// Keeps every q_{x,y} as an indeterminate.
struct SymbolicBraiding {
  using Coeff = QPolynomial;
  Coeff pair(Letter x, Letter y) const { return QPolynomial::variable(x, y); }
};

/// Trivial braiding: plain transposition, coefficient 1.
struct ClassicalBraiding {
  using Coeff = Rational;
  Coeff pair(Letter, Letter) const { return Rational{1}; }
};

/// q_{x,y} = q^{d_i a_ij} for the Cartan datum, with an explicit map from
/// alphabet letters to Cartan rows.
class CartanBraiding {
 public:
  using Coeff = LaurentPolynomial;

  CartanBraiding(CartanData data, std::map<Letter, std::size_t> letter_to_index)
      : data_(std::move(data)), index_(std::move(letter_to_index)) {}
  /// Letters 1..rank mapped to rows 0..rank-1.
  explicit CartanBraiding(CartanData data);

  Coeff pair(Letter x, Letter y) const {
    return LaurentPolynomial::q_power(cartan_exponent(x, y, data_, index_));
  }

  const CartanData& data() const { return data_; }
  const std::map<Letter, std::size_t>& letter_to_index() const { return index_; }
  std::size_t row_of(Letter x) const;

 private:
  CartanData data_;
  std::map<Letter, std::size_t> index_;
};

/// Cartan braiding evaluated at a nonzero rational q.
class NumericBraiding {
 public:
  using Coeff = Rational;

  NumericBraiding(CartanData data, std::map<Letter, std::size_t> letter_to_index, Rational q)
      : inner_(std::move(data), std::move(letter_to_index)), q_(std::move(q)) {
    if (q_.is_zero()) throw BraidingError("numeric braiding requires q != 0");
  }
  NumericBraiding(CartanData data, Rational q)
      : inner_(std::move(data)), q_(std::move(q)) {
    if (q_.is_zero()) throw BraidingError("numeric braiding requires q != 0");
  }

  Coeff pair(Letter x, Letter y) const {
    return q_.pow(cartan_exponent(x, y, inner_.data(), inner_.letter_to_index()));
  }

  const Rational& q() const { return q_; }
  const CartanBraiding& cartan() const { return inner_; }

 private:
  CartanBraiding inner_;
  Rational q_;
};

/// Explicit coefficient table; every letter pair that crosses must be listed.
template <class C>
class TableBraiding {
 public:
  using Coeff = C;

  TableBraiding() = default;
  explicit TableBraiding(std::map<std::pair<Letter, Letter>, C> table)
      : table_(std::move(table)) {}

  void set(Letter x, Letter y, C value) { table_[{x, y}] = std::move(value); }

  Coeff pair(Letter x, Letter y) const {
    auto it = table_.find({x, y});
    if (it == table_.end())
      throw BraidingError("braiding undefined for letter pair (" + std::to_string(x) +
                          "," + std::to_string(y) + ")");
    return it->second;
  }

  const std::map<std::pair<Letter, Letter>, C>& table() const { return table_; }

 private:
  std::map<std::pair<Letter, Letter>, C> table_;
};

/// Lifts a Laurent-coefficient braiding into the rational-function field, for
/// operations that need division.
template <class B>
class FieldLift {
 public:
  using Coeff = RationalFunction;

  explicit FieldLift(B inner) : inner_(std::move(inner)) {}

  Coeff pair(Letter x, Letter y) const { return RationalFunction(inner_.pair(x, y)); }

  const B& inner() const { return inner_; }

 private:
  B inner_;
};

/// The scalar picked up when x crosses left-to-right over y under the given
/// braiding (the diagonal braiding coefficient q_{x,y}).
template <class B>
typename B::Coeff braiding_coefficient_pair(Letter x, Letter y, const B& braiding) {
  return braiding.pair(x, y);
}

}  // namespace qshuffle
