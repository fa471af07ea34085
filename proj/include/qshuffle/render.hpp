#pragma once

#include <string>

#include "qshuffle/bases.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/qpolynomial.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/rational_function.hpp"
#include "qshuffle/tensor_expr.hpp"
#include "qshuffle/words.hpp"

namespace qshuffle {

// Plain-text rendering. Scalar one renders as "1" everywhere so tensor terms
// can drop unit coefficients.
std::string to_text(const BigInt& v);
std::string to_text(const Rational& v);
std::string to_text(const QMonomial& m);
std::string to_text(const QPolynomial& p);
std::string to_text(const LaurentPolynomial& p);
std::string to_text(const RationalFunction& f);
std::string to_text(const PrimeFactorization& f);

// True when the rendering needs parentheses before juxtaposition with a word.
bool needs_parens(const Rational& v);
bool needs_parens(const QPolynomial& p);
bool needs_parens(const LaurentPolynomial& p);
bool needs_parens(const RationalFunction& f);

std::string to_latex(const Word& w);
std::string to_latex(const Rational& v);
std::string to_latex(const QMonomial& m);
std::string to_latex(const QPolynomial& p);
std::string to_latex(const LaurentPolynomial& p);
std::string to_latex(const RationalFunction& f);

bool needs_parens_latex(const Rational& v);
bool needs_parens_latex(const QPolynomial& p);
bool needs_parens_latex(const LaurentPolynomial& p);
bool needs_parens_latex(const RationalFunction& f);

namespace detail {
std::string word_text(const Word& w);
std::string word_subscript(const Word& w);
std::string join_coefficient(const std::string& coeff, bool parens,
                             const std::string& tail, bool& first, std::string& out);
}  // namespace detail

/// "e(1,2) + q[1,2] e(2,1)"; the zero expression renders as "0", the unit
/// (empty word) term as "1".
template <class C>
std::string to_text(const TensorExpr<C>& expr) {
  if (expr.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : expr.terms()) {
    std::string coeff = to_text(c);
    std::string tail = w.empty() ? "" : "e" + w.to_string();
    detail::join_coefficient(coeff, needs_parens(c), tail, first, out);
  }
  return out;
}

/// Tensor notation: v_{1}\otimes v_{2} terms with q coefficients.
template <class C>
std::string to_latex(const TensorExpr<C>& expr) {
  if (expr.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : expr.terms()) {
    std::string coeff = to_latex(c);
    std::string tail = w.empty() ? "" : to_latex(w);
    detail::join_coefficient(coeff, needs_parens_latex(c), tail, first, out);
  }
  return out;
}

template <class F>
std::string to_text(const LyndonExpansion<F>& expansion) {
  std::string out = "v" + expansion.target.to_string() + " = ";
  bool first = true;
  std::string body;
  for (const auto& [w, c] : expansion.combination) {
    detail::join_coefficient(to_text(c), needs_parens(c), "X" + w.to_string(), first,
                             body);
  }
  return out + (body.empty() ? "0" : body);
}

template <class F>
std::string to_latex(const LyndonExpansion<F>& expansion) {
  std::string out = "v_{" + detail::word_subscript(expansion.target) + "} = ";
  std::string body;
  bool first = true;
  for (const auto& [w, c] : expansion.combination) {
    detail::join_coefficient(to_latex(c), needs_parens_latex(c),
                             "X_{" + detail::word_subscript(w) + "}", first, body);
  }
  return out + (body.empty() ? "0" : body);
}

}  // namespace qshuffle
