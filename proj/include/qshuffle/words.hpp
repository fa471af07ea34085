#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qshuffle {

/// Alphabet letter: a positive integer compared in natural order.
using Letter = std::uint32_t;

/// A finite sequence of letters. The default-constructed empty word is the
/// multiplicative unit of tensor products; factorization and primality are
/// defined only for nonempty words.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  /// Parses a comma-separated letter list such as "18,19,4,8,5,7".
  static Word parse(std::string_view text);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word prefix(std::size_t length) const;
  Word suffix(std::size_t from) const;
  Word concat(const Word& rhs) const;

  bool operator==(const Word& rhs) const = default;

  /// "(18,19,4)"; the empty word renders as "()".
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

enum class Ordering { Less, Equal, Greater };

/// Total order on words: letterwise comparison at the first differing
/// position; a proper prefix is Greater than its extensions.
Ordering compare_words(const Word& a, const Word& b);

/// Strict "ascending" comparator (minimal word first) for ordered containers.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return compare_words(a, b) == Ordering::Less;
  }
};

/// Strict "descending" comparator (greatest word first).
struct WordGreater {
  bool operator()(const Word& a, const Word& b) const {
    return compare_words(a, b) == Ordering::Greater;
  }
};

/// True iff every proper suffix of `a` is strictly Less than `a`.
/// Throws std::invalid_argument for the empty word.
bool is_prime(const Word& a);

/// Longest prefix of `a` that is prime. Always defined for nonempty input.
Word first_prime(const Word& a);

struct PrimeFactor {
  Word prime;
  std::uint32_t multiplicity = 1;
  bool operator==(const PrimeFactor& rhs) const = default;
};

/// Factorization a = p_1^{n_1} ... p_s^{n_s} with strictly ascending primes.
struct PrimeFactorization {
  std::vector<PrimeFactor> factors;

  Word reassemble() const;
  std::size_t total_length() const;
  bool operator==(const PrimeFactorization& rhs) const = default;
};

/// Peels the longest prime prefix repeatedly and groups equal adjacent primes.
PrimeFactorization prime_factorization(const Word& a);

/// Linear-time variant of prime_factorization (Duval-style scan adapted to
/// this order convention). Kept equivalent to the direct peel by tests.
PrimeFactorization duval_prime_factorization(const Word& a);

/// Letter multiplicities of a word; the grading of the tensor space.
class ContentVector {
 public:
  ContentVector() = default;

  /// Parses "1:2,2:1" (letter:count pairs).
  static ContentVector parse(std::string_view text);

  void add(Letter x, std::uint32_t n = 1);
  std::uint32_t count(Letter x) const;
  const std::map<Letter, std::uint32_t>& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return counts_.empty(); }

  ContentVector operator+(const ContentVector& rhs) const;
  bool operator==(const ContentVector& rhs) const = default;

  /// Number of distinct arrangements, total! / prod(count!).
  std::uint64_t multinomial() const;

  std::string to_string() const;

 private:
  std::map<Letter, std::uint32_t> counts_;
  std::uint64_t total_ = 0;
};

ContentVector content(const Word& a);

/// All words with the given content, sorted descending under compare_words
/// (index 0 is the greatest word). Throws std::invalid_argument on zero content.
std::vector<Word> enumerate_words(const ContentVector& u);

/// All primes over letters {1..alphabet_size} with length <= max_len, grouped
/// by length (index = length - 1), ascending within each group.
std::vector<std::vector<Word>> enumerate_primes(std::uint32_t alphabet_size,
                                                std::uint32_t max_len);

}  // namespace qshuffle
