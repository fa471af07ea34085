#include "qshuffle/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace qshuffle {

namespace {

std::uint32_t parse_positive_int(std::string_view text, const char* what) {
  if (text.empty()) throw std::invalid_argument(std::string(what) + ": empty number");
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument(std::string(what) + ": invalid character in '" +
                                  std::string(text) + "'");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > 1000000000ull)
      throw std::invalid_argument(std::string(what) + ": number out of range");
  }
  if (value == 0) throw std::invalid_argument(std::string(what) + ": must be >= 1");
  return static_cast<std::uint32_t>(value);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

}  // namespace

Word Word::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("word literal: empty");
  std::vector<Letter> letters;
  for (auto part : split(text, ',')) {
    letters.push_back(parse_positive_int(part, "word literal"));
  }
  return Word(std::move(letters));
}

Word Word::prefix(std::size_t length) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + length));
}

Word Word::suffix(std::size_t from) const {
  return Word(std::vector<Letter>(letters_.begin() + from, letters_.end()));
}

Word Word::concat(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(letters_[i]);
  }
  out += ")";
  return out;
}

Ordering compare_words(const Word& a, const Word& b) {
  std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] < b[i]) return Ordering::Less;
    if (a[i] > b[i]) return Ordering::Greater;
  }
  // One word is a prefix of the other: the shorter word is greater.
  if (a.size() < b.size()) return Ordering::Greater;
  if (a.size() > b.size()) return Ordering::Less;
  return Ordering::Equal;
}

bool is_prime(const Word& a) {
  if (a.empty()) throw std::invalid_argument("prime test undefined for empty word");
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (compare_words(a.suffix(i), a) != Ordering::Less) return false;
  }
  return true;
}

Word first_prime(const Word& a) {
  if (a.empty()) throw std::invalid_argument("first prime undefined for empty word");
  // The set of prime prefix lengths can have gaps, e.g. (2,2,1) is prime while
  // (2,2) is not, so every length must be examined.
  for (std::size_t length = a.size(); length >= 1; --length) {
    Word candidate = a.prefix(length);
    if (is_prime(candidate)) return candidate;
  }
  return a.prefix(1);  // unreachable: single letters are prime
}

Word PrimeFactorization::reassemble() const {
  std::vector<Letter> letters;
  for (const auto& factor : factors) {
    for (std::uint32_t n = 0; n < factor.multiplicity; ++n) {
      letters.insert(letters.end(), factor.prime.begin(), factor.prime.end());
    }
  }
  return Word(std::move(letters));
}

std::size_t PrimeFactorization::total_length() const {
  std::size_t total = 0;
  for (const auto& factor : factors) total += factor.prime.size() * factor.multiplicity;
  return total;
}

namespace {

PrimeFactorization group_factors(const std::vector<Word>& primes) {
  PrimeFactorization out;
  for (const auto& p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().multiplicity;
    } else {
      out.factors.push_back({p, 1});
    }
  }
  return out;
}

}  // namespace

PrimeFactorization prime_factorization(const Word& a) {
  if (a.empty()) throw std::invalid_argument("factorization undefined for empty word");
  std::vector<Word> primes;
  Word rest = a;
  while (!rest.empty()) {
    Word p = first_prime(rest);
    rest = rest.suffix(p.size());
    primes.push_back(std::move(p));
  }
  return group_factors(primes);
}

PrimeFactorization duval_prime_factorization(const Word& a) {
  if (a.empty()) throw std::invalid_argument("factorization undefined for empty word");
  // Duval's scan with letter comparisons inverted, matching the prefix-greater
  // order convention used throughout.
  std::vector<Word> primes;
  const auto& s = a.letters();
  std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && s[k] >= s[j]) {
      k = (s[k] > s[j]) ? i : k + 1;
      ++j;
    }
    std::size_t length = j - k;
    while (i <= k) {
      primes.push_back(a.prefix(i + length).suffix(i));
      i += length;
    }
  }
  return group_factors(primes);
}

ContentVector ContentVector::parse(std::string_view text) {
  ContentVector out;
  if (text.empty()) return out;
  for (auto part : split(text, ',')) {
    auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("content literal: expected letter:count in '" +
                                  std::string(part) + "'");
    Letter x = parse_positive_int(part.substr(0, colon), "content literal");
    std::uint32_t n = parse_positive_int(part.substr(colon + 1), "content literal");
    out.add(x, n);
  }
  return out;
}

void ContentVector::add(Letter x, std::uint32_t n) {
  if (n == 0) return;
  counts_[x] += n;
  total_ += n;
}

std::uint32_t ContentVector::count(Letter x) const {
  auto it = counts_.find(x);
  return it == counts_.end() ? 0 : it->second;
}

ContentVector ContentVector::operator+(const ContentVector& rhs) const {
  ContentVector out = *this;
  for (const auto& [x, n] : rhs.counts_) out.add(x, n);
  return out;
}

std::uint64_t ContentVector::multinomial() const {
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (const auto& [x, n] : counts_) {
    (void)x;
    // result *= C(placed + n, n), digit by digit to stay in range.
    for (std::uint64_t t = 1; t <= n; ++t) {
      ++placed;
      result = result * placed / t;
    }
  }
  return result;
}

std::string ContentVector::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, n] : counts_) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(x) + ":" + std::to_string(n);
  }
  out += "}";
  return out;
}

ContentVector content(const Word& a) {
  ContentVector out;
  for (Letter x : a) out.add(x);
  return out;
}

namespace {

void enumerate_words_rec(std::map<Letter, std::uint32_t>& remaining,
                         std::vector<Letter>& current, std::size_t target,
                         std::vector<Word>& out) {
  if (current.size() == target) {
    out.push_back(Word(current));
    return;
  }
  // Largest available letter first yields descending order overall: words of
  // equal length compare letterwise.
  for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
    if (it->second == 0) continue;
    --it->second;
    current.push_back(it->first);
    enumerate_words_rec(remaining, current, target, out);
    current.pop_back();
    ++it->second;
  }
}

}  // namespace

std::vector<Word> enumerate_words(const ContentVector& u) {
  if (u.total() == 0) throw std::invalid_argument("cannot enumerate words of zero content");
  std::map<Letter, std::uint32_t> remaining = u.counts();
  std::vector<Letter> current;
  std::vector<Word> out;
  out.reserve(u.multinomial());
  enumerate_words_rec(remaining, current, u.total(), out);
  return out;
}

std::vector<std::vector<Word>> enumerate_primes(std::uint32_t alphabet_size,
                                                std::uint32_t max_len) {
  if (alphabet_size < 1 || max_len < 1)
    throw std::invalid_argument("enumerate_primes requires alphabet_size >= 1 and max_len >= 1");
  std::vector<std::vector<Word>> by_length(max_len);
  // Duval's generation of Lyndon words, run over the inverted letter order:
  // the smallest letter is alphabet_size, stepping "up" decrements, and the
  // chain ends at letter 1.
  std::vector<Letter> w{alphabet_size};
  while (true) {
    by_length[w.size() - 1].push_back(Word(w));
    std::size_t base = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() % base]);
    while (!w.empty() && w.back() == 1) w.pop_back();
    if (w.empty()) break;
    --w.back();
  }
  for (auto& group : by_length) {
    std::sort(group.begin(), group.end(), WordLess{});
  }
  return by_length;
}

}  // namespace qshuffle
