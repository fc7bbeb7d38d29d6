#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "frogs/words.hpp"

using namespace frogs;

namespace {

// Textbook recursive LCS with memoization, used as an oracle against the
// rolling-row implementation.
int lcs_oracle(const Word& u, const Word& v, size_t i, size_t j,
               std::map<std::pair<size_t, size_t>, int>& memo) {
  if (i == 0 || j == 0) return 0;
  auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int best;
  if (u[i - 1] == v[j - 1]) {
    best = 1 + lcs_oracle(u, v, i - 1, j - 1, memo);
  } else {
    best = std::max(lcs_oracle(u, v, i - 1, j, memo), lcs_oracle(u, v, i, j - 1, memo));
  }
  memo[key] = best;
  return best;
}

int lcs_oracle(const Word& u, const Word& v) {
  std::map<std::pair<size_t, size_t>, int> memo;
  return lcs_oracle(u, v, u.size(), v.size(), memo);
}

std::vector<Word> all_words(int sigma, int len) {
  std::vector<Word> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (int a = 1; a <= sigma; ++a) {
        Word v = w;
        v.push_back(a);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("periodic expansion repeats the base word", "[words]") {
  CHECK(periodic_expand({1, 2, 1}, 8) == Word{1, 2, 1, 1, 2, 1, 1, 2});
  CHECK(periodic_expand({1, 2}, 5) == Word{1, 2, 1, 2, 1});
  CHECK(periodic_expand({3}, 4) == Word{3, 3, 3, 3});
  CHECK(periodic_expand({1, 2}, 0).empty());
  CHECK(periodic_expand({}, 0).empty());
  CHECK_THROWS_AS(periodic_expand({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(periodic_expand({1}, -1), std::invalid_argument);
}

TEST_CASE("zigzag and ascending words", "[words]") {
  CHECK(zigzag_word(1) == Word{1, 1});
  CHECK(zigzag_word(2) == Word{1, 2, 2, 1});
  CHECK(zigzag_word(3) == Word{1, 2, 3, 3, 2, 1});
  CHECK(zigzag_word(4) == Word{1, 2, 3, 4, 4, 3, 2, 1});
  CHECK(ascending_word(1) == Word{1});
  CHECK(ascending_word(4) == Word{1, 2, 3, 4});
  CHECK_THROWS_AS(zigzag_word(0), std::invalid_argument);
  CHECK_THROWS_AS(ascending_word(0), std::invalid_argument);
}

TEST_CASE("irreducibility detects proper periods", "[words]") {
  CHECK(is_irreducible({1}));
  CHECK(is_irreducible({1, 2, 1}));
  CHECK(is_irreducible({1, 2, 2, 1}));
  CHECK_FALSE(is_irreducible({1, 1}));
  CHECK_FALSE(is_irreducible({1, 2, 1, 2}));
  CHECK_FALSE(is_irreducible({1, 2, 3, 1, 2, 3}));
  CHECK(is_irreducible({1, 2, 2, 1, 1}));
  CHECK_THROWS_AS(is_irreducible({}), std::invalid_argument);
  // The zigzag word has a palindromic second half, so no proper period for
  // k >= 2; for k = 1 it is 11.
  CHECK_FALSE(is_irreducible(zigzag_word(1)));
  for (int k = 2; k <= 8; ++k) CHECK(is_irreducible(zigzag_word(k)));
  for (int k = 1; k <= 8; ++k) CHECK(is_irreducible(ascending_word(k)));
}

TEST_CASE("lcs length on pinned pairs", "[words]") {
  CHECK(lcs_length({1, 2}, {2, 1}) == 1);
  CHECK(lcs_length({1, 2, 1, 2}, {2, 1, 2, 1}) == 3);
  CHECK(lcs_length({}, {1, 2, 3}) == 0);
  CHECK(lcs_length({1, 2, 3}, {}) == 0);
  CHECK(lcs_length({}, {}) == 0);
  CHECK(lcs_length({1, 3, 2, 3}, {3, 1, 3, 2}) == 3);
  Word u{1, 2, 2, 1, 1, 2, 2, 1};
  CHECK(lcs_length(u, u) == static_cast<int>(u.size()));
}

TEST_CASE("lcs length agrees with the recursive oracle exhaustively", "[words]") {
  std::vector<Word> pool;
  for (int len = 0; len <= 4; ++len)
    for (const Word& w : all_words(2, len)) pool.push_back(w);
  for (const Word& u : pool)
    for (const Word& v : pool) REQUIRE(lcs_length(u, v) == lcs_oracle(u, v));
}

TEST_CASE("lcs length agrees with the recursive oracle on random words", "[words]") {
  SplitRng rng(7, 0);
  Alphabet alpha{3};
  for (int t = 0; t < 200; ++t) {
    Word u = sample_word(alpha, static_cast<long long>(rng.below(13)), rng);
    Word v = sample_word(alpha, static_cast<long long>(rng.below(13)), rng);
    REQUIRE(lcs_length(u, v) == lcs_oracle(u, v));
    // symmetric in its arguments
    REQUIRE(lcs_length(u, v) == lcs_length(v, u));
  }
}

TEST_CASE("sampled words stay in range and are reproducible", "[words]") {
  Alphabet alpha{4};
  SplitRng a(42, 1), b(42, 1), c(42, 2);
  Word wa = sample_word(alpha, 500, a);
  Word wb = sample_word(alpha, 500, b);
  Word wc = sample_word(alpha, 500, c);
  CHECK(wa == wb);
  CHECK(wa != wc);  // different stream, different word
  for (int x : wa) {
    REQUIRE(x >= 1);
    REQUIRE(x <= 4);
  }
  bool seen[5] = {};
  for (int x : wa) seen[x] = true;
  for (int letter = 1; letter <= 4; ++letter) CHECK(seen[letter]);
  CHECK_THROWS_AS(sample_word({0}, 3, a), std::invalid_argument);
  CHECK_THROWS_AS(sample_word(alpha, -2, a), std::invalid_argument);
}
