#include <set>

#include "doctest.h"
#include "plactic/alphabet.hpp"

using namespace plactic;

TEST_CASE("letters are ordered 1 < ... < n < nbar < ... < 1bar") {
  int const n = 3;
  std::vector<Letter> const expected{Letter::unbarred(1), Letter::unbarred(2), Letter::unbarred(3),
                                     Letter::bar(3),      Letter::bar(2),      Letter::bar(1)};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(expected[i].rank(n) == static_cast<int>(i) + 1);
    CHECK(Letter::from_rank(static_cast<int>(i) + 1, n) == expected[i]);
    for (std::size_t j = 0; j < expected.size(); ++j) {
      CHECK((expected[i] < expected[j]) == (i < j));
    }
  }
  CHECK(Letter::bar(2).conjugate() == Letter::unbarred(2));
}

TEST_CASE("parse and format") {
  auto const w = parse_word("1 2 -3 -2", 3);
  CHECK(w.size() == 4);
  CHECK(w.letters[2] == Letter::bar(3));
  CHECK(format_word(w) == "1 2 -3 -2");
  CHECK(format_word(Word(3)) == "");
  CHECK(parse_word("  ", 3).empty());
  CHECK_THROWS_AS(parse_word("1 4", 3), ParseError);
  CHECK_THROWS_AS(parse_word("0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1 x", 3), ParseError);
  CHECK_THROWS_AS(parse_word("--1", 3), ParseError);
}

TEST_CASE("parse/format round trip on every word of length <= 6 over C_2") {
  std::size_t total = 0;
  for (std::size_t len = 0; len <= 6; ++len) {
    CHECK(count_words(len, 2) == (1ull << (2 * len)));
    std::set<Word> seen;
    for (std::uint64_t i = 0; i < count_words(len, 2); ++i) {
      auto const w = word_from_index(i, len, 2);
      CHECK(w.size() == len);
      CHECK(parse_word(format_word(w), 2) == w);
      seen.insert(w);
      ++total;
    }
    CHECK(seen.size() == count_words(len, 2));
  }
  CHECK(total == 5461);
}

TEST_CASE("words carry their alphabet") {
  auto const a = parse_word("1 2", 2);
  auto const b = parse_word("1 2", 3);
  CHECK_THROWS_AS(concat(a, b), AlphabetMismatch);
  CHECK(concat(a, parse_word("-1", 2)) == parse_word("1 2 -1", 2));
}
