#pragma once

#include <cstdint>

#include "qshuffle/laurent.hpp"

namespace qshuffle {

/// Mahonian q-factorial [n]_Q! = prod_{j=1}^{n} (1 + Q + ... + Q^{j-1}),
/// computed from the expanded product of geometric sums so the value stays
/// correct when Q specializes to 1. Works over any commutative ring with
/// construction from integer constants.
template <class Ring>
Ring mahonian_factorial(std::uint32_t n, const Ring& base) {
  Ring result{1};
  Ring power{1};
  Ring factor{1};
  for (std::uint32_t j = 2; j <= n; ++j) {
    power *= base;
    factor += power;
    result *= factor;
  }
  return result;
}

/// Symmetric q-integer [m]_q = q^{-m+1} + q^{-m+3} + ... + q^{m-1}, with every
/// exponent multiplied by `scale` (so scale = d_i yields [m]_{q_i}).
LaurentPolynomial symmetric_q_number(std::uint32_t m, int scale = 1);

/// [n]_q! = prod_{i=1}^{n} [i]_q in the symmetric convention.
LaurentPolynomial symmetric_q_factorial(std::uint32_t n, int scale = 1);

/// Symmetric q-binomial [m choose k]_q, computed division-free through the
/// Gaussian-binomial Pascal recurrence so it remains valid at roots of unity.
LaurentPolynomial symmetric_q_binomial(std::uint32_t m, std::uint32_t k, int scale = 1);

}  // namespace qshuffle
