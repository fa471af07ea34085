#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qshuffle/words.hpp"
#include "support/oracles.hpp"

using namespace qshuffle;

namespace {

std::vector<Word> all_words(std::uint32_t alphabet, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Letter> current;
  auto rec = [&](auto&& self) -> void {
    if (!current.empty()) out.push_back(Word(current));
    if (current.size() == max_len) return;
    for (Letter x = 1; x <= alphabet; ++x) {
      current.push_back(x);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

Word random_word(std::mt19937& rng, std::uint32_t alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<Letter> letter_dist(1, alphabet);
  std::vector<Letter> letters(len_dist(rng));
  for (auto& x : letters) x = letter_dist(rng);
  return Word(std::move(letters));
}

}  // namespace

TEST_CASE("compare_words basics") {
  CHECK(compare_words(Word{18, 19, 4}, Word{18, 19, 4}) == Ordering::Equal);
  // A proper prefix is greater than its extensions.
  CHECK(compare_words(Word{1}, Word{1, 2}) == Ordering::Greater);
  CHECK(compare_words(Word{1, 2}, Word{1}) == Ordering::Less);
  CHECK(compare_words(Word{19, 4}, Word{18, 19}) == Ordering::Greater);
  CHECK(compare_words(Word{18, 19}, Word{19, 4}) == Ordering::Less);
}

TEST_CASE("compare_words trichotomy and transitivity") {
  std::mt19937 rng(1234);
  auto as_int = [](Ordering o) { return o == Ordering::Less ? -1 : (o == Ordering::Equal ? 0 : 1); };
  for (int trial = 0; trial < 3000; ++trial) {
    Word a = random_word(rng, 3, 5);
    Word b = random_word(rng, 3, 5);
    Word c = random_word(rng, 3, 5);
    CHECK(as_int(compare_words(a, b)) == -as_int(compare_words(b, a)));
    CHECK((compare_words(a, b) == Ordering::Equal) == (a == b));
    if (compare_words(a, b) != Ordering::Greater && compare_words(b, c) != Ordering::Greater) {
      CHECK(compare_words(a, c) != Ordering::Greater);
    }
  }
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(Word{18}));
  CHECK(is_prime(Word{19, 4, 8, 5, 7}));
  CHECK_FALSE(is_prime(Word{1, 1}));  // suffix (1) is a prefix, hence greater
  CHECK_FALSE(is_prime(Word{1, 2}));
  CHECK(is_prime(Word{2, 1}));
  CHECK(is_prime(Word{2, 2, 1}));  // prime even though prefix (2,2) is not
  CHECK_THROWS_AS(is_prime(Word{}), std::invalid_argument);
}

TEST_CASE("first_prime examples") {
  CHECK(first_prime(Word{18, 19, 4, 8, 5, 7}) == Word{18});
  CHECK(first_prime(Word{19, 4, 8, 5, 7}) == Word{19, 4, 8, 5, 7});
  CHECK(first_prime(Word{2, 1, 2, 1}) == Word{2, 1});
  // The prime-prefix set can have gaps; the longest prime prefix wins.
  CHECK(first_prime(Word{2, 2, 1}) == Word{2, 2, 1});
  CHECK_THROWS_AS(first_prime(Word{}), std::invalid_argument);
}

TEST_CASE("first_prime is a prime prefix and fixes primes") {
  for (const Word& a : all_words(3, 6)) {
    Word p = first_prime(a);
    CHECK(is_prime(p));
    CHECK(a.prefix(p.size()) == p);
    if (is_prime(a)) CHECK(p == a);
  }
}

TEST_CASE("prime_factorization examples") {
  auto upf = prime_factorization(Word{18, 19, 4, 8, 5, 7});
  REQUIRE(upf.factors.size() == 2);
  CHECK(upf.factors[0] == PrimeFactor{Word{18}, 1});
  CHECK(upf.factors[1] == PrimeFactor{Word{19, 4, 8, 5, 7}, 1});

  auto ones = prime_factorization(Word{1, 1, 1});
  REQUIRE(ones.factors.size() == 1);
  CHECK(ones.factors[0] == PrimeFactor{Word{1}, 3});

  auto repeated = prime_factorization(Word{2, 1, 2, 1});
  REQUIRE(repeated.factors.size() == 1);
  CHECK(repeated.factors[0] == PrimeFactor{Word{2, 1}, 2});

  CHECK_THROWS_AS(prime_factorization(Word{}), std::invalid_argument);
}

TEST_CASE("factorization reassembles and ascends") {
  for (const Word& a : all_words(3, 6)) {
    auto upf = prime_factorization(a);
    CHECK(upf.reassemble() == a);
    for (const auto& factor : upf.factors) {
      CHECK(is_prime(factor.prime));
      CHECK(factor.multiplicity >= 1);
    }
    for (std::size_t i = 0; i + 1 < upf.factors.size(); ++i) {
      CHECK(compare_words(upf.factors[i].prime, upf.factors[i + 1].prime) ==
            Ordering::Less);
    }
  }
}

TEST_CASE("uniqueness oracle: exhaustive segmentations over {1,2,3} up to length 6") {
  for (const Word& a : all_words(3, 6)) {
    auto segmentations = testing::prime_segmentations(a);
    REQUIRE(segmentations.size() == 1);
    std::vector<Word> peeled;
    for (const auto& factor : prime_factorization(a).factors) {
      for (std::uint32_t n = 0; n < factor.multiplicity; ++n) peeled.push_back(factor.prime);
    }
    CHECK(segmentations[0] == peeled);
  }
}

TEST_CASE("duval factorization agrees with the direct peel") {
  for (const Word& a : all_words(3, 6)) {
    CHECK(duval_prime_factorization(a) == prime_factorization(a));
  }
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    Word a = random_word(rng, 4, 24);
    CHECK(duval_prime_factorization(a) == prime_factorization(a));
  }
}

TEST_CASE("content examples") {
  ContentVector u = content(Word{1, 1, 2});
  CHECK(u.count(1) == 2);
  CHECK(u.count(2) == 1);
  CHECK(u.total() == 3);

  ContentVector v = content(Word{18, 19, 4, 8, 5, 7});
  for (Letter x : {4u, 5u, 7u, 8u, 18u, 19u}) CHECK(v.count(x) == 1);
  CHECK(v.total() == 6);

  CHECK(content(Word{}).total() == 0);
  CHECK(content(Word{}).empty());
}

TEST_CASE("content addition matches concatenation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Word a = random_word(rng, 3, 6);
    Word b = random_word(rng, 3, 6);
    CHECK(content(a) + content(b) == content(a.concat(b)));
  }
}

TEST_CASE("enumerate_words examples") {
  ContentVector u;
  u.add(1, 2);
  u.add(2, 1);
  std::vector<Word> expected{Word{2, 1, 1}, Word{1, 2, 1}, Word{1, 1, 2}};
  CHECK(enumerate_words(u) == expected);

  ContentVector single;
  single.add(5, 1);
  CHECK(enumerate_words(single) == std::vector<Word>{Word{5}});

  ContentVector pair;
  pair.add(1, 1);
  pair.add(2, 1);
  CHECK(enumerate_words(pair) == std::vector<Word>{Word{2, 1}, Word{1, 2}});

  CHECK_THROWS_AS(enumerate_words(ContentVector{}), std::invalid_argument);
}

TEST_CASE("enumerate_words is descending with multinomial count") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    ContentVector u;
    std::uniform_int_distribution<std::uint32_t> count_dist(0, 2);
    for (Letter x = 1; x <= 3; ++x) u.add(x, count_dist(rng));
    if (u.total() == 0 || u.total() > 7) continue;
    auto words = enumerate_words(u);
    CHECK(words.size() == u.multinomial());
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      CHECK(compare_words(words[i], words[i + 1]) == Ordering::Greater);
    }
    for (const auto& w : words) CHECK(content(w) == u);
  }
}

TEST_CASE("enumerate_primes examples") {
  auto primes = enumerate_primes(2, 2);
  REQUIRE(primes.size() == 2);
  CHECK(primes[0] == std::vector<Word>{Word{1}, Word{2}});
  CHECK(primes[1] == std::vector<Word>{Word{2, 1}});

  auto longer = enumerate_primes(2, 3);
  REQUIRE(longer.size() == 3);
  CHECK(longer[2] == std::vector<Word>{Word{2, 1, 1}, Word{2, 2, 1}});

  auto unary = enumerate_primes(1, 3);
  CHECK(unary[0] == std::vector<Word>{Word{1}});
  CHECK(unary[1].empty());
  CHECK(unary[2].empty());
}

TEST_CASE("enumerate_primes matches exhaustive scan and necklace counts") {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    auto primes = enumerate_primes(k, 7);
    std::vector<std::vector<Word>> expected(7);
    for (const Word& a : all_words(k, 7)) {
      if (is_prime(a)) expected[a.size() - 1].push_back(a);
    }
    for (auto& group : expected) std::sort(group.begin(), group.end(), WordLess{});
    for (std::uint32_t n = 1; n <= 7; ++n) {
      CHECK(primes[n - 1] == expected[n - 1]);
      CHECK(primes[n - 1].size() == testing::necklace_count(k, n));
    }
  }
}

TEST_CASE("word and content parsing") {
  CHECK(Word::parse("18,19,4,8,5,7") == Word{18, 19, 4, 8, 5, 7});
  CHECK(Word::parse("7") == Word{7});
  CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("0"), std::invalid_argument);

  ContentVector u = ContentVector::parse("1:2,2:1");
  CHECK(u.count(1) == 2);
  CHECK(u.count(2) == 1);
  CHECK_THROWS_AS(ContentVector::parse("1-2"), std::invalid_argument);
}
