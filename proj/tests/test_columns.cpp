#include "doctest.h"
#include "plactic/columns.hpp"

using namespace plactic;

namespace {

Column col(std::string const& text, int n) { return Column(parse_word(text, n)); }

// Admissibility straight from the counting definition, over a rank bitmask.
bool admissible_mask(unsigned mask, int n) {
  for (int m = 1; m <= n; ++m) {
    int letters = 0;
    for (int v = 1; v <= m; ++v) {
      letters += (mask >> (v - 1)) & 1;
      letters += (mask >> (2 * n - v)) & 1;
    }
    if (letters > m) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("column words are strictly increasing") {
  CHECK(is_column_word(parse_word("1 2 -2", 2)));
  CHECK(is_column_word(parse_word("", 2)));
  CHECK_FALSE(is_column_word(parse_word("2 1", 2)));
  CHECK_FALSE(is_column_word(parse_word("1 1", 2)));
  CHECK_THROWS_AS(col("2 1", 2), std::invalid_argument);
}

TEST_CASE("splitting an admissible column") {
  auto const s = split_or_throw(col("2 5 6 8 -8 -5 -2", 8));
  CHECK(s.paired == std::vector<int>{8, 5, 2});
  CHECK(s.replacements == std::vector<int>{7, 4, 1});
  CHECK(s.right.word() == parse_word("2 5 6 8 -7 -4 -1", 8));
  CHECK(s.left.word() == parse_word("1 4 6 7 -8 -5 -2", 8));
}

TEST_CASE("a non-admissible column fails at the first missing replacement") {
  auto const r = split(col("2 3 4 6 -6 -3 -2", 6));
  REQUIRE(std::holds_alternative<SplitFailure>(r));
  CHECK(std::get<SplitFailure>(r).index == 3);
  CHECK_FALSE(is_admissible(col("2 3 4 6 -6 -3 -2", 6)));
  CHECK_THROWS(split_or_throw(col("2 3 4 6 -6 -3 -2", 6)));
}

TEST_CASE("columns of the worked symplectic tableau") {
  auto const s = split_or_throw(col("2 -3 -2", 3));
  CHECK(s.right.word() == parse_word("2 -3 -1", 3));
  CHECK(s.left.word() == parse_word("1 -3 -2", 3));
  auto const plain = split_or_throw(col("1 2 3", 3));
  CHECK(plain.left == plain.right);
  CHECK(plain.paired.empty());
}

TEST_CASE("admissibility counts") {
  CHECK(admissibility_counts(col("1 -1", 2)) == std::vector<int>{2, 2});
  CHECK_FALSE(is_admissible(col("1 -1", 2)));
  CHECK(is_admissible(col("2 -2", 2)));
  CHECK(is_admissible(Column(Word(2))));
  CHECK(splits(Column(Word(2))));
}

TEST_CASE("enumeration against a brute-force oracle") {
  for (int n = 1; n <= 4; ++n) {
    std::size_t expected = 0;
    for (unsigned mask = 1; mask < (1u << (2 * n)); ++mask) expected += admissible_mask(mask, n);
    auto const columns = enumerate_admissible(n);
    CHECK(columns.size() == expected);
    CHECK(enumerate_columns(n).size() == (1u << (2 * n)));
    for (std::size_t i = 0; i + 1 < columns.size(); ++i) {
      CHECK(columns[i].height() <= columns[i + 1].height());
    }
  }
  CHECK(enumerate_admissible(2).size() == 9);
  CHECK(enumerate_admissible(3).size() == 34);
  CHECK(enumerate_admissible(4).size() == 125);
}
