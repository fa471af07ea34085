#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "qshuffle/laurent.hpp"
#include "qshuffle/qpolynomial.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/words.hpp"

namespace qshuffle {

/// Symmetrizable Cartan matrix with its symmetrizing integers d_i.
/// Validated on construction: square, a_ii = 2, a_ij <= 0 off-diagonal,
/// d_i >= 1, and d_i a_ij = d_j a_ji.
struct CartanData {
  std::vector<std::vector<int>> a;
  std::vector<int> d;

  CartanData(std::vector<std::vector<int>> matrix, std::vector<int> symmetrizers);

  std::size_t rank() const { return a.size(); }

  static CartanData a1xa1() { return CartanData({{2, 0}, {0, 2}}, {1, 1}); }
  static CartanData a2() { return CartanData({{2, -1}, {-1, 2}}, {1, 1}); }
  static CartanData a3() {
    return CartanData({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1});
  }
  // Convention: a_12 = -2, a_21 = -1, d = (1, 2).
  static CartanData b2() { return CartanData({{2, -2}, {-1, 2}}, {1, 2}); }
  static CartanData g2() { return CartanData({{2, -3}, {-1, 2}}, {1, 3}); }
};

/// How the braiding indeterminates q_{x,y} specialize to concrete scalars.
class Specialization {
 public:
  enum class Kind { Classical, Cartan, Numeric, SymbolicUnivariate };

  static Specialization classical();
  static Specialization cartan(CartanData data);
  /// Cartan substitution followed by evaluation at a nonzero rational q.
  static Specialization numeric(CartanData data, Rational q);
  /// q_{x,y} -> q^{table[{x,y}]} with a caller-supplied exponent table.
  static Specialization symbolic_univariate(std::map<QVar, int> exponent_table);

  Kind kind() const { return kind_; }
  const CartanData& cartan_data() const;
  const Rational& q_value() const;
  const std::map<QVar, int>& exponent_table() const;

 private:
  Specialization(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<CartanData> cartan_;
  std::optional<Rational> q_;
  std::map<QVar, int> table_;
};

/// Exponent of q that the Cartan substitution assigns to q_{x,y}.
/// Throws BraidingError when a letter has no row in letter_to_index.
int cartan_exponent(Letter x, Letter y, const CartanData& data,
                    const std::map<Letter, std::size_t>& letter_to_index);

/// Every q_{x,y} -> 1.
Rational specialize_classical(const QPolynomial& p);

/// q_{x,y} -> q^{d_i a_ij} with i = letter_to_index[x], j = letter_to_index[y].
LaurentPolynomial specialize_cartan(const QPolynomial& p, const CartanData& data,
                                    const std::map<Letter, std::size_t>& letter_to_index);

/// Cartan substitution evaluated at rational q != 0.
Rational specialize_numeric(const QPolynomial& p, const CartanData& data, const Rational& q,
                            const std::map<Letter, std::size_t>& letter_to_index);

/// q_{x,y} -> q^{table[{x,y}]}; throws BraidingError for missing pairs.
LaurentPolynomial specialize_univariate(const QPolynomial& p,
                                        const std::map<QVar, int>& exponent_table);

using SpecializedValue = std::variant<Rational, LaurentPolynomial>;

/// Dispatching wrapper over the typed specialize functions above.
SpecializedValue specialize(const QPolynomial& p, const Specialization& spec,
                            const std::map<Letter, std::size_t>& letter_to_index);

}  // namespace qshuffle
