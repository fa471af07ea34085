#pragma once

#include <string>
#include <variant>

#include "qshuffle/braiding.hpp"
#include "qshuffle/json_io.hpp"

namespace qshuffle {

/// The braidings the CLI can run with. Table coefficients are Laurent
/// polynomials in q.
using BraidingVariant = std::variant<SymbolicBraiding, ClassicalBraiding, CartanBraiding,
                                     NumericBraiding, TableBraiding<LaurentPolynomial>>;

/// Parses a small Laurent expression such as "q^2", "1", "-q", or
/// "q^-1 + q". Terms are [coefficient][q[^exponent]] joined by + or -.
LaurentPolynomial parse_laurent_expr(std::string_view text);

/// Parses the TOML subset used by braiding files (key = value lines; string,
/// integer, and nested array values; # comments) into a JSON object.
Json toml_subset_to_json(const std::string& text);

/// Loads a braiding description from a .toml or .json file. Recognized keys:
///   kind    = "cartan" | "numeric" | "table" | "classical" | "symbolic"
///   cartan  = [[2,-1],[-1,2]]      Cartan matrix
///   d       = [1,1]                symmetrizers (default: all 1)
///   letters = [1,2]                letter of each Cartan row (default 1..rank)
///   q       = "3/2"                numeric specialization point
///   table   = [[x, y, "q^-1"], ...]  explicit coefficients
/// A missing kind is inferred from the keys present. Throws BraidingError on
/// malformed input.
BraidingVariant load_braiding_file(const std::string& path);

/// Resolves a --braiding argument: the built-in names "symbolic" and
/// "classical", "cartan:FILE", "numeric:Q:FILE", "table:FILE", or a bare
/// file path whose contents pick the kind.
BraidingVariant braiding_from_arg(const std::string& arg);

}  // namespace qshuffle
