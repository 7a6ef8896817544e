#pragma once

#include <variant>
#include <vector>

#include "plactic/alphabet.hpp"

namespace plactic {

bool is_column_word(Word const& w);

/// A strictly increasing column, read top to bottom.
class Column {
 public:
  Column() = default;
  explicit Column(int n) : word_(n) {}
  /// Throws std::invalid_argument unless `w` is strictly increasing.
  explicit Column(Word w);

  int n() const { return word_.n; }
  std::size_t height() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  Letter operator[](std::size_t row) const { return word_[row]; }
  Word const& word() const { return word_; }
  bool contains(Letter a) const;

  bool operator==(Column const&) const = default;
  auto operator<=>(Column const& other) const { return word_ <=> other.word_; }

 private:
  Word word_;
};

/// N(m) = #{x in C : x <= m or x >= m̄} for m = 1..n (index m - 1).
std::vector<int> admissibility_counts(Column const& c);
bool is_admissible(Column const& c);

/// Sheats' splitting of an admissible column.
struct SplitColumn {
  Column base;
  std::vector<int> paired;       // I: x_1 > ... > x_r with x, x̄ both in base
  std::vector<int> replacements; // J: y_1 > ... > y_r
  Column left;                   // lC: each x_i replaced by y_i
  Column right;                  // rC: each x̄_i replaced by ȳ_i
};

/// `index` is the 1-based i for which no y_i exists.
struct SplitFailure {
  std::size_t index = 0;
};

using SplitResult = std::variant<SplitColumn, SplitFailure>;

SplitResult split(Column const& c);
inline bool splits(Column const& c) { return std::holds_alternative<SplitColumn>(split(c)); }

/// Left and right columns of an admissible column. Throws
/// std::invalid_argument when `c` cannot be split.
SplitColumn split_or_throw(Column const& c);

/// Every nonempty admissible column over C_n, ordered by height and then
/// lexicographically by rank.
std::vector<Column> enumerate_admissible(int n);

/// Every strictly increasing column over C_n (including the empty one), same order.
std::vector<Column> enumerate_columns(int n);

}  // namespace plactic
