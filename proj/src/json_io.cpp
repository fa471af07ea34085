#include "qshuffle/json_io.hpp"

#include <stdexcept>

namespace qshuffle {

Json to_json(const BigInt& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt{j.get<long long>()};
  if (j.is_string()) return BigInt::from_string(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

Json to_json(const Rational& v) {
  if (v.is_integer()) return to_json(v.num());
  return v.to_string();
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  return Rational(bigint_from_json(j));
}

Json to_json(const Word& w) {
  Json out = Json::array();
  for (Letter x : w) out.push_back(x);
  return out;
}

Word word_from_json(const Json& j) {
  std::vector<Letter> letters;
  for (const auto& x : j) {
    long long v = x.get<long long>();
    if (v < 1) throw std::invalid_argument("letters must be >= 1");
    letters.push_back(static_cast<Letter>(v));
  }
  return Word(std::move(letters));
}

Json to_json(const ContentVector& u) {
  Json out = Json::object();
  for (const auto& [x, n] : u.counts()) {
    out[std::to_string(x)] = n;
  }
  return out;
}

ContentVector content_from_json(const Json& j) {
  ContentVector out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out.add(static_cast<Letter>(std::stoul(it.key())), it.value().get<std::uint32_t>());
  }
  return out;
}

Json to_json(const PrimeFactorization& f) {
  Json out = Json::array();
  for (const auto& factor : f.factors) {
    out.push_back(Json{{"prime", to_json(factor.prime)},
                       {"multiplicity", factor.multiplicity}});
  }
  return out;
}

PrimeFactorization factorization_from_json(const Json& j) {
  PrimeFactorization out;
  for (const auto& factor : j) {
    out.factors.push_back({word_from_json(factor.at("prime")),
                           factor.at("multiplicity").get<std::uint32_t>()});
  }
  return out;
}

Json to_json(const QPolynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json monomial = Json::array();
    for (const auto& [v, e] : m.exponents()) {
      monomial.push_back(Json::array({v.x, v.y, e}));
    }
    out.push_back(Json{{"coeff", to_json(c)}, {"monomial", std::move(monomial)}});
  }
  return out;
}

QPolynomial qpolynomial_from_json(const Json& j) {
  QPolynomial out;
  for (const auto& term : j) {
    QMonomial m;
    for (const auto& factor : term.at("monomial")) {
      m = m * QMonomial::variable(factor.at(0).get<Letter>(), factor.at(1).get<Letter>(),
                                  factor.at(2).get<int>());
    }
    out += QPolynomial::term(std::move(m), bigint_from_json(term.at("coeff")));
  }
  return out;
}

Json to_json(const LaurentPolynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.coeffs()) {
    out[std::to_string(e)] = to_json(c);
  }
  return out;
}

LaurentPolynomial laurent_from_json(const Json& j) {
  LaurentPolynomial out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += LaurentPolynomial::monomial(std::stoi(it.key()), bigint_from_json(it.value()));
  }
  return out;
}

Json to_json(const RationalFunction& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction rational_function_from_json(const Json& j) {
  return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

}  // namespace qshuffle
