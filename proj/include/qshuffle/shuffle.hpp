#pragma once

#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qshuffle/braiding.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/tensor_expr.hpp"
#include "qshuffle/words.hpp"

namespace qshuffle {

/// A permutation of positions {0..n-1} that is strictly increasing on each
/// consecutive block: to[i] is the target position of source position i.
struct ShufflePermutation {
  std::vector<std::size_t> to;
  std::vector<std::size_t> block_lengths;

  std::size_t size() const { return to.size(); }
  bool operator==(const ShufflePermutation& rhs) const = default;
};

/// All (l_1,...,l_r)-shuffles for the given block lengths; the count is the
/// multinomial coefficient of the blocks. Deterministic enumeration order.
std::vector<ShufflePermutation> shuffle_permutations(
    const std::vector<std::size_t>& block_lengths);

/// Multinomial count of shuffles, used to pre-check term budgets.
std::uint64_t shuffle_count(const std::vector<std::size_t>& block_lengths);

struct ShuffleOptions {
  /// Worker threads for the shuffle expansion; 0 picks a hardware default.
  /// Results are identical for every worker count.
  std::size_t workers = 1;
  /// Abort guard: maximum number of lifted terms expanded per product.
  std::uint64_t max_terms = 1000000;
};

/// Applies the Matsumoto lift T_w of a shuffle permutation to a tensor word:
/// output position w(i) holds letter a_i, and the coefficient is the product
/// over inversions (i < j, w(i) > w(j)) of the braiding coefficient of
/// (a_i, a_j). Equals the coefficient from applying braid generators along
/// any reduced expression of w.
template <class B>
std::pair<Word, typename B::Coeff> lift_coefficient(const ShufflePermutation& w,
                                                    const Word& a, const B& braiding) {
  if (w.size() != a.size())
    throw std::invalid_argument("shuffle permutation length does not match word length");
  std::vector<Letter> rearranged(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    rearranged[w.to[i]] = a[i];
  }
  typename B::Coeff coefficient{1};
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (w.to[i] > w.to[j]) {
        coefficient *= braiding.pair(a[i], a[j]);
      }
    }
  }
  return {Word(std::move(rearranged)), std::move(coefficient)};
}

namespace detail {

/// Expands one lifted block product sum_{w} T_w(word) over a precomputed
/// permutation list, optionally partitioned across workers. Merging worker
/// results in worker order is deterministic and, with exact coefficient
/// arithmetic, independent of the partitioning.
template <class B>
TensorExpr<typename B::Coeff> expand_shuffles(
    const std::vector<ShufflePermutation>& perms, const Word& word, const B& braiding,
    std::size_t workers) {
  using Expr = TensorExpr<typename B::Coeff>;
  if (workers <= 1 || perms.size() < 64) {
    Expr out;
    for (const auto& w : perms) {
      auto [rearranged, coefficient] = lift_coefficient(w, word, braiding);
      out.add_term(std::move(rearranged), std::move(coefficient));
    }
    return out;
  }
  std::size_t n = std::min(workers, perms.size());
  std::vector<Expr> partial(n);
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    threads.emplace_back([&, t] {
      try {
        std::size_t begin = perms.size() * t / n;
        std::size_t end = perms.size() * (t + 1) / n;
        for (std::size_t i = begin; i < end; ++i) {
          auto [rearranged, coefficient] = lift_coefficient(perms[i], word, braiding);
          partial[t].add_term(std::move(rearranged), std::move(coefficient));
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& thread : threads) thread.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  Expr out;
  for (auto& part : partial) out += part;
  return out;
}

}  // namespace detail

/// Quantum shuffle product: bilinear extension of
///   (x_1 ... x_p) * (x_{p+1} ... x_n) = sum over (p, n-p)-shuffles of T_w.
/// The empty word acts as the unit.
template <class B>
TensorExpr<typename B::Coeff> shuffle_product(const TensorExpr<typename B::Coeff>& a,
                                              const TensorExpr<typename B::Coeff>& b,
                                              const B& braiding,
                                              const ShuffleOptions& options = {}) {
  using Expr = TensorExpr<typename B::Coeff>;
  Expr out;
  std::uint64_t budget = 0;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.empty() || wb.empty()) {
        out.add_term(wa.empty() ? wb : wa, ca * cb);
        continue;
      }
      budget += shuffle_count({wa.size(), wb.size()});
      if (budget > options.max_terms)
        throw TermBudgetError("shuffle expansion exceeds the term budget of " +
                              std::to_string(options.max_terms));
      auto perms = shuffle_permutations({wa.size(), wb.size()});
      Expr expanded =
          detail::expand_shuffles(perms, wa.concat(wb), braiding, options.workers);
      out += expanded.scaled(ca * cb);
    }
  }
  return out;
}

/// Left fold of shuffle_product; the empty factor list gives the unit.
template <class B>
TensorExpr<typename B::Coeff> shuffle_product_many(
    const std::vector<TensorExpr<typename B::Coeff>>& factors, const B& braiding,
    const ShuffleOptions& options = {}) {
  using Expr = TensorExpr<typename B::Coeff>;
  Expr out = Expr::unit();
  for (const auto& factor : factors) {
    out = shuffle_product(out, factor, braiding, options);
  }
  return out;
}

}  // namespace qshuffle
