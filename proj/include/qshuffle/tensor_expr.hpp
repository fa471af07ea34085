#pragma once

#include <map>

#include "qshuffle/words.hpp"

namespace qshuffle {

/// Finite linear combination of tensor words with coefficients in C, held in
/// canonical form: no zero coefficients, terms ordered ascending under
/// compare_words, so the minimal word (the leading one in this algebra) is first.
template <class C>
class TensorExpr {
 public:
  TensorExpr() = default;

  static TensorExpr unit() { return single(Word{}); }
  static TensorExpr single(Word w, C coefficient = C{1}) {
    TensorExpr out;
    out.add_term(std::move(w), std::move(coefficient));
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, C, WordLess>& terms() const { return terms_; }

  C coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(Word w, C coefficient) {
    if (coefficient.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(coefficient));
      return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TensorExpr& operator+=(const TensorExpr& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
  }

  TensorExpr& operator-=(const TensorExpr& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
  }

  friend TensorExpr operator+(TensorExpr lhs, const TensorExpr& rhs) { return lhs += rhs; }
  friend TensorExpr operator-(TensorExpr lhs, const TensorExpr& rhs) { return lhs -= rhs; }

  TensorExpr scaled(const C& factor) const {
    TensorExpr out;
    if (factor.is_zero()) return out;
    for (const auto& [w, c] : terms_) out.add_term(w, c * factor);
    return out;
  }

  bool operator==(const TensorExpr& rhs) const = default;

 private:
  std::map<Word, C, WordLess> terms_;
};

}  // namespace qshuffle
