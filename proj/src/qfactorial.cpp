#include "qshuffle/qfactorial.hpp"

#include <stdexcept>
#include <vector>

namespace qshuffle {

LaurentPolynomial symmetric_q_number(std::uint32_t m, int scale) {
  LaurentPolynomial out;
  for (int t = -static_cast<int>(m) + 1; t <= static_cast<int>(m) - 1; t += 2) {
    out += LaurentPolynomial::q_power(t * scale);
  }
  return out;
}

LaurentPolynomial symmetric_q_factorial(std::uint32_t n, int scale) {
  LaurentPolynomial out{1};
  for (std::uint32_t i = 1; i <= n; ++i) {
    out *= symmetric_q_number(i, scale);
  }
  return out;
}

LaurentPolynomial symmetric_q_binomial(std::uint32_t m, std::uint32_t k, int scale) {
  if (k > m) throw std::invalid_argument("q-binomial with k > m");
  // Gaussian binomial in Q = q^2 via the Pascal recurrence
  //   C(m, k) = C(m-1, k-1) + Q^k C(m-1, k),
  // then shifted by q^{-k(m-k)} to the symmetric convention.
  std::vector<LaurentPolynomial> row{LaurentPolynomial{1}};
  for (std::uint32_t i = 1; i <= m; ++i) {
    std::vector<LaurentPolynomial> next(i + 1);
    next[0] = LaurentPolynomial{1};
    next[i] = LaurentPolynomial{1};
    for (std::uint32_t j = 1; j < i; ++j) {
      next[j] = row[j - 1] + LaurentPolynomial::q_power(2 * static_cast<int>(j)) * row[j];
    }
    row = std::move(next);
  }
  int shift = -static_cast<int>(k) * static_cast<int>(m - k);
  return row[k].shifted(shift).exponents_scaled(scale);
}

}  // namespace qshuffle
