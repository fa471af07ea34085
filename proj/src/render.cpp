#include "qshuffle/render.hpp"

namespace qshuffle {

namespace detail {

std::string word_text(const Word& w) { return w.to_string(); }

std::string word_subscript(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

/// Appends "coeff tail" to out, folding a leading minus sign of the
/// coefficient into the joining operator and dropping unit coefficients.
std::string join_coefficient(const std::string& coeff, bool parens,
                             const std::string& tail, bool& first, std::string& out) {
  std::string body = coeff;
  bool negative = false;
  if (!parens && !body.empty() && body[0] == '-') {
    negative = true;
    body = body.substr(1);
  }
  if (parens) body = "(" + body + ")";
  std::string rendered;
  if (tail.empty()) {
    rendered = body;
  } else if (body == "1") {
    rendered = tail;
  } else {
    rendered = body + " " + tail;
  }
  if (first) {
    out += negative ? "-" + rendered : rendered;
    first = false;
  } else {
    out += negative ? " - " + rendered : " + " + rendered;
  }
  return out;
}

}  // namespace detail

std::string to_text(const BigInt& v) { return v.to_string(); }

std::string to_text(const Rational& v) { return v.to_string(); }

std::string to_text(const QMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [v, e] : m.exponents()) {
    if (!out.empty()) out += " ";
    out += "q[" + std::to_string(v.x) + "," + std::to_string(v.y) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_text(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string coeff = c.to_string();
    std::string tail = m.is_unit() ? "" : to_text(m);
    detail::join_coefficient(coeff, false, tail, first, out);
  }
  return out;
}

std::string to_text(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.coeffs()) {
    std::string tail;
    if (e == 1) {
      tail = "q";
    } else if (e != 0) {
      tail = "q^" + std::to_string(e);
    }
    detail::join_coefficient(c.to_string(), false, tail, first, out);
  }
  return out;
}

std::string to_text(const RationalFunction& f) {
  if (f.den().is_one()) return to_text(f.num());
  std::string num = to_text(f.num());
  if (needs_parens(f.num())) num = "(" + num + ")";
  return num + "/(" + to_text(f.den()) + ")";
}

std::string to_text(const PrimeFactorization& f) {
  std::string out;
  for (const auto& factor : f.factors) {
    if (!out.empty()) out += " ";
    out += factor.prime.to_string();
    if (factor.multiplicity > 1) out += "^" + std::to_string(factor.multiplicity);
  }
  return out;
}

bool needs_parens(const Rational&) { return false; }
bool needs_parens(const QPolynomial& p) { return p.terms().size() > 1; }
bool needs_parens(const LaurentPolynomial& p) { return p.coeffs().size() > 1; }
bool needs_parens(const RationalFunction& f) {
  return f.den().is_one() ? needs_parens(f.num()) : false;
}

std::string to_latex(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += "\\otimes ";
    out += "v_{" + std::to_string(w[i]) + "}";
  }
  return out;
}

std::string to_latex(const Rational& v) {
  if (v.is_integer()) return v.num().to_string();
  return "\\frac{" + v.num().to_string() + "}{" + v.den().to_string() + "}";
}

std::string to_latex(const QMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [v, e] : m.exponents()) {
    out += "q_{" + std::to_string(v.x) + "," + std::to_string(v.y) + "}";
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string to_latex(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string tail = m.is_unit() ? "" : to_latex(m);
    detail::join_coefficient(c.to_string(), false, tail, first, out);
  }
  return out;
}

std::string to_latex(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.coeffs()) {
    std::string tail;
    if (e == 1) {
      tail = "q";
    } else if (e != 0) {
      tail = "q^{" + std::to_string(e) + "}";
    }
    detail::join_coefficient(c.to_string(), false, tail, first, out);
  }
  return out;
}

std::string to_latex(const RationalFunction& f) {
  if (f.den().is_one()) return to_latex(f.num());
  return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

bool needs_parens_latex(const Rational&) { return false; }
bool needs_parens_latex(const QPolynomial& p) { return p.terms().size() > 1; }
bool needs_parens_latex(const LaurentPolynomial& p) { return p.coeffs().size() > 1; }
bool needs_parens_latex(const RationalFunction& f) {
  return f.den().is_one() ? needs_parens_latex(f.num()) : false;
}

}  // namespace qshuffle
