#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qshuffle/qfactorial.hpp"
#include "qshuffle/shuffle.hpp"

namespace qshuffle {

/// X_a: the shuffle product of v_p over the unique prime factorization of a,
/// each prime repeated by its multiplicity, in ascending prime order. Every
/// term has the content of a, and the minimal word occurring is a itself.
template <class B>
TensorExpr<typename B::Coeff> x_of(const Word& a, const B& braiding,
                                   const ShuffleOptions& options = {}) {
  if (a.empty()) throw std::invalid_argument("X_a undefined for empty word");
  using Expr = TensorExpr<typename B::Coeff>;
  std::vector<Expr> factors;
  for (const auto& factor : prime_factorization(a).factors) {
    for (std::uint32_t n = 0; n < factor.multiplicity; ++n) {
      factors.push_back(Expr::single(factor.prime));
    }
  }
  return shuffle_product_many(factors, braiding, options);
}

/// Leading coefficient of X_a on the word a itself, from the closed form
/// alpha_aa = prod_j [n_j]_{Q_j}! with Q_j the full crossing product of the
/// j-th prime with itself.
template <class B>
typename B::Coeff alpha_leading(const Word& a, const B& braiding) {
  if (a.empty()) throw std::invalid_argument("alpha undefined for empty word");
  typename B::Coeff out{1};
  for (const auto& factor : prime_factorization(a).factors) {
    typename B::Coeff block{1};
    for (Letter x : factor.prime) {
      for (Letter y : factor.prime) {
        block *= braiding.pair(x, y);
      }
    }
    out *= mahonian_factorial(factor.multiplicity, block);
  }
  return out;
}

/// Change-of-basis rows over one grading class: words lists S(u) descending
/// (index 0 is the greatest word), and entries[i][j] is the coefficient of
/// words[j] in X_{words[i]}. Nonzero entries only occur where words[j] >=
/// words[i]; the diagonal is alpha_leading.
template <class C>
struct BasisMatrix {
  std::vector<Word> words;
  std::vector<std::vector<C>> entries;
};

template <class B>
BasisMatrix<typename B::Coeff> basis_matrix(const ContentVector& u, const B& braiding,
                                            const ShuffleOptions& options = {}) {
  BasisMatrix<typename B::Coeff> out;
  out.words = enumerate_words(u);
  out.entries.reserve(out.words.size());
  for (const auto& a : out.words) {
    auto x = x_of(a, braiding, options);
    std::vector<typename B::Coeff> row;
    row.reserve(out.words.size());
    for (const auto& b : out.words) {
      row.push_back(x.coefficient(b));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

/// v_a as a linear combination of X_c over c in S(content(a)); the support
/// lies at words >= a, listed ascending so the target itself comes first.
template <class F>
struct LyndonExpansion {
  Word target;
  std::map<Word, F, WordLess> combination;
};

/// Full triangular solve over one grading class: expansions of v_b in the
/// X-basis for every b in S(u), by back-substitution in descending word
/// order. Requires a field coefficient type. Throws DegenerateBasisError when
/// a diagonal leading coefficient vanishes under the active braiding.
template <class B>
std::vector<LyndonExpansion<typename B::Coeff>> express_all_in_lyndon_basis(
    const ContentVector& u, const B& braiding, const ShuffleOptions& options = {}) {
  using F = typename B::Coeff;
  using Expr = TensorExpr<F>;
  const std::vector<Word> words = enumerate_words(u);
  std::vector<Expr> x_rows;
  x_rows.reserve(words.size());
  std::map<Word, std::size_t, WordLess> index;
  for (std::size_t i = 0; i < words.size(); ++i) {
    x_rows.push_back(x_of(words[i], braiding, options));
    index.emplace(words[i], i);
  }

  std::vector<LyndonExpansion<F>> expansions(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word& b = words[i];
    F diagonal = x_rows[i].coefficient(b);
    if (diagonal.is_zero())
      throw DegenerateBasisError(
          "basis degenerate at this specialization: alpha_cc = 0 for word " +
              b.to_string(),
          b.to_string());
    // v_b = (X_b - sum_{c > b} alpha_{bc} v_c) / alpha_bb; every c > b was
    // already solved because the words are processed greatest-first.
    LyndonExpansion<F> beta;
    beta.target = b;
    beta.combination.emplace(b, F{1} / diagonal);
    for (const auto& [c, coeff] : x_rows[i].terms()) {
      if (c == b) continue;
      const auto& solved = expansions[index.at(c)];
      F scale = coeff / diagonal;
      for (const auto& [w, value] : solved.combination) {
        auto it = beta.combination.find(w);
        if (it == beta.combination.end()) {
          beta.combination.emplace(w, -(scale * value));
        } else {
          it->second -= scale * value;
          if (it->second.is_zero()) beta.combination.erase(it);
        }
      }
    }
    expansions[i] = std::move(beta);
  }

  // Substituting the X expansions back must reproduce each v_b exactly.
  for (std::size_t i = 0; i < words.size(); ++i) {
    Expr check;
    for (const auto& [c, value] : expansions[i].combination) {
      check += x_rows[index.at(c)].scaled(value);
    }
    if (!(check == Expr::single(words[i])))
      throw std::logic_error("Lyndon expansion verification failed for " +
                             words[i].to_string());
  }
  return expansions;
}

/// Expansion of a single v_a; see express_all_in_lyndon_basis.
template <class B>
LyndonExpansion<typename B::Coeff> express_in_lyndon_basis(
    const Word& a, const B& braiding, const ShuffleOptions& options = {}) {
  if (a.empty()) throw std::invalid_argument("expansion undefined for empty word");
  auto all = express_all_in_lyndon_basis(content(a), braiding, options);
  for (auto& expansion : all) {
    if (expansion.target == a) return std::move(expansion);
  }
  throw std::logic_error("target word missing from its own grading class");
}

/// The q-Serre element
///   sum_{n=0}^{1-a_ij} (-1)^n [1-a_ij choose n]_{q_i} e_i^n e_j e_i^{1-a_ij-n}
/// expanded with the shuffle product; vanishes identically in the quantum
/// symmetric algebra for Cartan braidings.
inline TensorExpr<LaurentPolynomial> serre_element(Letter i, Letter j,
                                                   const CartanBraiding& braiding,
                                                   const ShuffleOptions& options = {}) {
  if (i == j) throw std::invalid_argument("Serre element requires i != j");
  using Expr = TensorExpr<LaurentPolynomial>;
  const CartanData& cd = braiding.data();
  std::size_t row_i = braiding.row_of(i);
  std::size_t row_j = braiding.row_of(j);
  int m = 1 - cd.a[row_i][row_j];
  int scale = cd.d[row_i];
  Expr out;
  for (int n = 0; n <= m; ++n) {
    std::vector<Expr> factors;
    for (int t = 0; t < n; ++t) factors.push_back(Expr::single(Word{i}));
    factors.push_back(Expr::single(Word{j}));
    for (int t = 0; t < m - n; ++t) factors.push_back(Expr::single(Word{i}));
    LaurentPolynomial coefficient =
        symmetric_q_binomial(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n),
                             scale);
    if (n % 2 == 1) coefficient = -coefficient;
    out += shuffle_product_many(factors, braiding, options).scaled(coefficient);
  }
  return out;
}

/// For each word in S(u), whether its leading coefficient vanishes at a
/// primitive l-th root of unity, which is where the triangular solve would
/// degenerate under that numeric specialization.
inline std::vector<std::pair<Word, bool>> check_root_degeneracy(
    const ContentVector& u, const CartanBraiding& braiding, std::uint32_t l) {
  std::vector<std::pair<Word, bool>> out;
  for (const auto& a : enumerate_words(u)) {
    out.emplace_back(a, vanishes_at_root_of_unity(alpha_leading(a, braiding), l));
  }
  return out;
}

}  // namespace qshuffle
