// qshuffle: quantum shuffle products and Lyndon-word bases from the command
// line. See README.md for the braiding file format and output schemas.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

#include "qshuffle/bases.hpp"
#include "qshuffle/braiding_config.hpp"
#include "qshuffle/json_io.hpp"
#include "qshuffle/render.hpp"
#include "qshuffle/shuffle.hpp"

using namespace qshuffle;

namespace {

constexpr std::size_t kMaxWorkers = 64;

struct CommonOpts {
  std::string braiding_arg;
  std::string format = "text";
  std::size_t parallelism = 1;
  std::uint64_t max_terms = 1000000;

  ShuffleOptions shuffle_options() const {
    ShuffleOptions out;
    if (parallelism == 0) {
      unsigned hw = std::thread::hardware_concurrency();
      out.workers = std::min<std::size_t>(hw == 0 ? 1 : hw, kMaxWorkers);
    } else {
      out.workers = std::min<std::size_t>(parallelism, kMaxWorkers);
    }
    out.max_terms = max_terms;
    return out;
  }

  BraidingVariant braiding() const { return braiding_from_arg(braiding_arg); }
};

void add_common_options(CLI::App* cmd, CommonOpts& opts, bool with_braiding = true) {
  if (with_braiding) {
    cmd->add_option("--braiding", opts.braiding_arg,
                    "Braiding: symbolic, classical, cartan:FILE, "
                    "numeric:Q:FILE, table:FILE, or FILE")
        ->envname("QSHUFFLE_BRAIDING");
  }
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  cmd->add_option("--parallelism", opts.parallelism,
                  "Worker threads for shuffle expansion (0 = auto, capped at 64)")
      ->capture_default_str();
  cmd->add_option("--max-terms", opts.max_terms,
                  "Abort guard: maximum lifted terms per product")
      ->capture_default_str();
}

template <class C>
void emit_tensor(const TensorExpr<C>& expr, const CommonOpts& opts) {
  if (opts.format == "json") {
    std::cout << to_json(expr).dump() << "\n";
  } else if (opts.format == "latex") {
    std::cout << to_latex(expr) << "\n";
  } else {
    std::cout << to_text(expr) << "\n";
  }
}

template <class C>
void emit_scalar(const C& value, const CommonOpts& opts) {
  if (opts.format == "json") {
    std::cout << JsonCodec<C>::encode(value).dump() << "\n";
  } else if (opts.format == "latex") {
    std::cout << to_latex(value) << "\n";
  } else {
    std::cout << to_text(value) << "\n";
  }
}

template <class F>
void emit_expansion(const LyndonExpansion<F>& expansion, const CommonOpts& opts) {
  if (opts.format == "json") {
    std::cout << to_json(expansion).dump() << "\n";
  } else if (opts.format == "latex") {
    std::cout << to_latex(expansion) << "\n";
  } else {
    std::cout << to_text(expansion) << "\n";
  }
}

template <class C>
void emit_basis(const BasisMatrix<C>& matrix, const CommonOpts& opts) {
  if (opts.format == "json") {
    std::cout << to_json(matrix).dump() << "\n";
    return;
  }
  if (opts.format == "latex") {
    std::string out = "\\begin{pmatrix}";
    for (std::size_t i = 0; i < matrix.entries.size(); ++i) {
      if (i != 0) out += " \\\\ ";
      for (std::size_t j = 0; j < matrix.entries[i].size(); ++j) {
        if (j != 0) out += " & ";
        out += to_latex(matrix.entries[i][j]);
      }
    }
    out += "\\end{pmatrix}";
    std::cout << out << "\n";
    return;
  }
  std::cout << "words:";
  for (const auto& w : matrix.words) std::cout << " " << w.to_string();
  std::cout << "\n";
  for (std::size_t i = 0; i < matrix.entries.size(); ++i) {
    std::cout << "X" << matrix.words[i].to_string() << ":";
    for (const auto& entry : matrix.entries[i]) {
      std::string cell = to_text(entry);
      if (needs_parens(entry)) cell = "(" + cell + ")";
      std::cout << " " << cell;
    }
    std::cout << "\n";
  }
}

void run_factorize(const std::string& word_arg, const CommonOpts& opts) {
  auto upf = prime_factorization(Word::parse(word_arg));
  if (opts.format == "json") {
    std::cout << to_json(upf).dump() << "\n";
  } else {
    std::cout << to_text(upf) << "\n";
  }
}

void run_primes(std::uint32_t alphabet, std::uint32_t max_len, const CommonOpts& opts) {
  auto groups = enumerate_primes(alphabet, max_len);
  if (opts.format == "json") {
    Json out = Json::array();
    for (std::size_t n = 0; n < groups.size(); ++n) {
      Json words = Json::array();
      for (const auto& w : groups[n]) words.push_back(to_json(w));
      out.push_back(Json{{"length", n + 1}, {"primes", std::move(words)}});
    }
    std::cout << out.dump() << "\n";
    return;
  }
  for (std::size_t n = 0; n < groups.size(); ++n) {
    std::cout << (n + 1) << ":";
    for (const auto& w : groups[n]) std::cout << " " << w.to_string();
    std::cout << "\n";
  }
}

void run_words(const std::string& content_arg, const CommonOpts& opts) {
  auto words = enumerate_words(ContentVector::parse(content_arg));
  if (opts.format == "json") {
    Json out = Json::array();
    for (const auto& w : words) out.push_back(to_json(w));
    std::cout << out.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::cout << (i == 0 ? "" : " ") << words[i].to_string();
  }
  std::cout << "\n";
}

void run_shuffle(const std::string& a_arg, const std::string& b_arg,
                 const CommonOpts& opts) {
  Word a = Word::parse(a_arg);
  Word b = Word::parse(b_arg);
  std::visit(
      [&](const auto& braiding) {
        using B = std::decay_t<decltype(braiding)>;
        using Expr = TensorExpr<typename B::Coeff>;
        emit_tensor(shuffle_product(Expr::single(a), Expr::single(b), braiding,
                                    opts.shuffle_options()),
                    opts);
      },
      opts.braiding());
}

void run_xa(const std::string& word_arg, const CommonOpts& opts) {
  Word a = Word::parse(word_arg);
  std::visit(
      [&](const auto& braiding) {
        emit_tensor(x_of(a, braiding, opts.shuffle_options()), opts);
      },
      opts.braiding());
}

void run_alpha(const std::string& word_arg, const CommonOpts& opts) {
  Word a = Word::parse(word_arg);
  std::visit([&](const auto& braiding) { emit_scalar(alpha_leading(a, braiding), opts); },
             opts.braiding());
}

void run_basis(const std::string& content_arg, const CommonOpts& opts) {
  ContentVector u = ContentVector::parse(content_arg);
  std::visit(
      [&](const auto& braiding) {
        emit_basis(basis_matrix(u, braiding, opts.shuffle_options()), opts);
      },
      opts.braiding());
}

void run_express(const std::string& word_arg, const CommonOpts& opts) {
  Word a = Word::parse(word_arg);
  std::visit(
      [&](const auto& braiding) {
        using B = std::decay_t<decltype(braiding)>;
        if constexpr (std::is_same_v<B, SymbolicBraiding>) {
          throw BraidingError(
              "express needs a field specialization: classical, numeric, cartan, "
              "or table");
        } else if constexpr (std::is_same_v<B, CartanBraiding> ||
                             std::is_same_v<B, TableBraiding<LaurentPolynomial>>) {
          emit_expansion(
              express_in_lyndon_basis(a, FieldLift<B>(braiding), opts.shuffle_options()),
              opts);
        } else {
          emit_expansion(express_in_lyndon_basis(a, braiding, opts.shuffle_options()),
                         opts);
        }
      },
      opts.braiding());
}

const CartanBraiding& require_cartan(const BraidingVariant& braiding, const char* what) {
  const auto* cartan = std::get_if<CartanBraiding>(&braiding);
  if (cartan == nullptr)
    throw BraidingError(std::string(what) + " requires a Cartan braiding (cartan:FILE)");
  return *cartan;
}

void run_serre(std::uint32_t i, std::uint32_t j, const CommonOpts& opts) {
  BraidingVariant braiding = opts.braiding();
  emit_tensor(
      serre_element(i, j, require_cartan(braiding, "serre"), opts.shuffle_options()),
      opts);
}

void run_rootcheck(const std::string& content_arg, std::uint32_t l,
                   const CommonOpts& opts) {
  ContentVector u = ContentVector::parse(content_arg);
  BraidingVariant braiding = opts.braiding();
  auto verdicts = check_root_degeneracy(u, require_cartan(braiding, "rootcheck"), l);
  if (opts.format == "json") {
    Json out = Json::array();
    for (const auto& [w, degenerate] : verdicts) {
      out.push_back(Json{{"word", to_json(w)}, {"degenerate", degenerate}});
    }
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& [w, degenerate] : verdicts) {
    std::cout << w.to_string() << ": " << (degenerate ? "DEGENERATE" : "regular")
              << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum shuffle products and Lyndon-word bases"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string word_a, word_b, content_arg;
  std::uint32_t int_a = 0, int_b = 0;

  auto* factorize = app.add_subcommand("factorize", "Unique prime factorization");
  factorize->add_option("word", word_a, "Comma-separated letters")->required();
  add_common_options(factorize, opts, false);

  auto* primes = app.add_subcommand("primes", "Primes up to a length, grouped by length");
  primes->add_option("alphabet", int_a, "Alphabet size k (letters 1..k)")->required();
  primes->add_option("max_len", int_b, "Maximum length")->required();
  add_common_options(primes, opts, false);

  auto* words = app.add_subcommand("words", "Grading class S(u), descending");
  words->add_option("content", content_arg, "letter:count pairs, e.g. 1:2,2:1")
      ->required();
  add_common_options(words, opts, false);

  auto* shuffle = app.add_subcommand("shuffle", "Quantum shuffle product of two words");
  shuffle->add_option("word_a", word_a)->required();
  shuffle->add_option("word_b", word_b)->required();
  add_common_options(shuffle, opts);

  auto* xa = app.add_subcommand("xa", "Basis element X_a for a word");
  xa->add_option("word", word_a)->required();
  add_common_options(xa, opts);

  auto* alpha = app.add_subcommand("alpha", "Leading coefficient of X_a");
  alpha->add_option("word", word_a)->required();
  add_common_options(alpha, opts);

  auto* basis = app.add_subcommand("basis", "Change-of-basis rows over S(u)");
  basis->add_option("content", content_arg)->required();
  add_common_options(basis, opts);

  auto* express = app.add_subcommand("express", "v_a in the X-basis");
  express->add_option("word", word_a)->required();
  add_common_options(express, opts);

  auto* serre = app.add_subcommand("serre", "q-Serre element for two letters");
  serre->add_option("i", int_a)->required();
  serre->add_option("j", int_b)->required();
  add_common_options(serre, opts);

  auto* rootcheck =
      app.add_subcommand("rootcheck", "Leading-coefficient vanishing at roots of unity");
  rootcheck->add_option("content", content_arg)->required();
  rootcheck->add_option("l", int_b, "Root-of-unity order (>= 2)")->required();
  add_common_options(rootcheck, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (factorize->parsed()) {
      run_factorize(word_a, opts);
    } else if (primes->parsed()) {
      if (int_a < 1 || int_b < 1)
        throw std::invalid_argument("primes needs alphabet >= 1 and max_len >= 1");
      run_primes(int_a, int_b, opts);
    } else if (words->parsed()) {
      run_words(content_arg, opts);
    } else if (shuffle->parsed()) {
      run_shuffle(word_a, word_b, opts);
    } else if (xa->parsed()) {
      run_xa(word_a, opts);
    } else if (alpha->parsed()) {
      run_alpha(word_a, opts);
    } else if (basis->parsed()) {
      run_basis(content_arg, opts);
    } else if (express->parsed()) {
      run_express(word_a, opts);
    } else if (serre->parsed()) {
      if (int_a < 1 || int_b < 1) throw std::invalid_argument("letters must be >= 1");
      run_serre(int_a, int_b, opts);
    } else if (rootcheck->parsed()) {
      if (int_b < 2) throw std::invalid_argument("rootcheck needs l >= 2");
      run_rootcheck(content_arg, int_b, opts);
    }
  } catch (const DegenerateBasisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const BraidingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
