#pragma once

#include <stdexcept>
#include <string>

namespace qshuffle {

/// A braiding coefficient was requested for a letter pair the active braiding
/// does not define, or a braiding/specialization input is unusable.
struct BraidingError : std::domain_error {
  explicit BraidingError(const std::string& what) : std::domain_error(what) {}
};

/// The triangular change of basis is singular at the active specialization:
/// some leading coefficient vanishes.
struct DegenerateBasisError : std::domain_error {
  DegenerateBasisError(const std::string& what, std::string degenerate_word)
      : std::domain_error(what), word(std::move(degenerate_word)) {}
  std::string word;
};

/// A shuffle expansion exceeded the configured term budget.
struct TermBudgetError : std::runtime_error {
  explicit TermBudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qshuffle
