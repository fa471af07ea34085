#pragma once

#include <json.hpp>

#include "qshuffle/bases.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/qpolynomial.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/rational_function.hpp"
#include "qshuffle/tensor_expr.hpp"
#include "qshuffle/words.hpp"

namespace qshuffle {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings beyond that; both forms parse back.
Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

/// "3/2" as a string, integers as plain numbers.
Json to_json(const Rational& v);
Rational rational_from_json(const Json& j);

/// [18,19,4,8,5,7]
Json to_json(const Word& w);
Word word_from_json(const Json& j);

/// {"1": 2, "2": 1}
Json to_json(const ContentVector& u);
ContentVector content_from_json(const Json& j);

/// [{"prime": [2,1], "multiplicity": 2}]
Json to_json(const PrimeFactorization& f);
PrimeFactorization factorization_from_json(const Json& j);

/// [{"coeff": 1, "monomial": [[1,2,1]]}]
Json to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const Json& j);

/// {"-1": 1, "1": 1}
Json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const Json& j);

/// {"num": <laurent>, "den": <laurent>}
Json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);

template <class C>
struct JsonCodec;

template <>
struct JsonCodec<Rational> {
  static Json encode(const Rational& v) { return to_json(v); }
  static Rational decode(const Json& j) { return rational_from_json(j); }
};

template <>
struct JsonCodec<QPolynomial> {
  static Json encode(const QPolynomial& v) { return to_json(v); }
  static QPolynomial decode(const Json& j) { return qpolynomial_from_json(j); }
};

template <>
struct JsonCodec<LaurentPolynomial> {
  static Json encode(const LaurentPolynomial& v) { return to_json(v); }
  static LaurentPolynomial decode(const Json& j) { return laurent_from_json(j); }
};

template <>
struct JsonCodec<RationalFunction> {
  static Json encode(const RationalFunction& v) { return to_json(v); }
  static RationalFunction decode(const Json& j) { return rational_function_from_json(j); }
};

/// [{"word": [1,2], "coeff": ...}] in canonical (ascending) term order.
template <class C>
Json to_json(const TensorExpr<C>& expr) {
  Json out = Json::array();
  for (const auto& [w, c] : expr.terms()) {
    out.push_back(Json{{"word", to_json(w)}, {"coeff", JsonCodec<C>::encode(c)}});
  }
  return out;
}

template <class C>
TensorExpr<C> tensor_from_json(const Json& j) {
  TensorExpr<C> out;
  for (const auto& term : j) {
    out.add_term(word_from_json(term.at("word")), JsonCodec<C>::decode(term.at("coeff")));
  }
  return out;
}

/// {"target": [...], "terms": [{"word": [...], "coeff": ...}]}
template <class F>
Json to_json(const LyndonExpansion<F>& expansion) {
  Json terms = Json::array();
  for (const auto& [w, c] : expansion.combination) {
    terms.push_back(Json{{"word", to_json(w)}, {"coeff", JsonCodec<F>::encode(c)}});
  }
  return Json{{"target", to_json(expansion.target)}, {"terms", std::move(terms)}};
}

template <class F>
LyndonExpansion<F> expansion_from_json(const Json& j) {
  LyndonExpansion<F> out;
  out.target = word_from_json(j.at("target"));
  for (const auto& term : j.at("terms")) {
    out.combination.emplace(word_from_json(term.at("word")),
                            JsonCodec<F>::decode(term.at("coeff")));
  }
  return out;
}

/// {"words": [[...],...], "rows": [[coeff,...],...]} dense, row-major, with
/// the word list as the shared header for rows and columns.
template <class C>
Json to_json(const BasisMatrix<C>& matrix) {
  Json words = Json::array();
  for (const auto& w : matrix.words) words.push_back(to_json(w));
  Json rows = Json::array();
  for (const auto& row : matrix.entries) {
    Json encoded = Json::array();
    for (const auto& c : row) encoded.push_back(JsonCodec<C>::encode(c));
    rows.push_back(std::move(encoded));
  }
  return Json{{"words", std::move(words)}, {"rows", std::move(rows)}};
}

}  // namespace qshuffle
