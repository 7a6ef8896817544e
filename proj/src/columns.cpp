#include "plactic/columns.hpp"

#include <algorithm>

namespace plactic {

bool is_column_word(Word const& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!(w[i - 1] < w[i])) return false;
  }
  return true;
}

Column::Column(Word w) : word_(std::move(w)) {
  if (!is_column_word(word_)) {
    throw std::invalid_argument("not a column word: " + format_word(word_));
  }
}

bool Column::contains(Letter a) const {
  return std::binary_search(word_.begin(), word_.end(), a);
}

std::vector<int> admissibility_counts(Column const& c) {
  std::vector<int> counts(static_cast<std::size_t>(c.n()), 0);
  // x <= m or x >= m̄ exactly when the value of x is at most m.
  for (Letter a : c.word()) counts[static_cast<std::size_t>(a.value() - 1)]++;
  for (std::size_t m = 1; m < counts.size(); ++m) counts[m] += counts[m - 1];
  return counts;
}

bool is_admissible(Column const& c) {
  auto counts = admissibility_counts(c);
  for (std::size_t m = 0; m < counts.size(); ++m) {
    if (counts[m] > static_cast<int>(m + 1)) return false;
  }
  return true;
}

SplitResult split(Column const& c) {
  SplitColumn out;
  out.base = c;
  for (int x = c.n(); x >= 1; --x) {
    if (c.contains(Letter::unbarred(x)) && c.contains(Letter::bar(x))) out.paired.push_back(x);
  }
  int bound = 0;
  for (std::size_t i = 0; i < out.paired.size(); ++i) {
    int x = out.paired[i];
    int limit = i == 0 ? x : std::min(bound, x);
    int y = limit - 1;
    while (y >= 1 && (c.contains(Letter::unbarred(y)) || c.contains(Letter::bar(y)))) --y;
    if (y < 1) return SplitFailure{i + 1};
    out.replacements.push_back(y);
    bound = y;
  }

  auto left = c.word();
  auto right = c.word();
  for (std::size_t i = 0; i < out.paired.size(); ++i) {
    int x = out.paired[i];
    int y = out.replacements[i];
    std::replace(left.letters.begin(), left.letters.end(), Letter::unbarred(x),
                 Letter::unbarred(y));
    std::replace(right.letters.begin(), right.letters.end(), Letter::bar(x), Letter::bar(y));
  }
  std::sort(left.letters.begin(), left.letters.end());
  std::sort(right.letters.begin(), right.letters.end());
  out.left = Column(std::move(left));
  out.right = Column(std::move(right));
  return out;
}

SplitColumn split_or_throw(Column const& c) {
  auto result = split(c);
  if (auto* failure = std::get_if<SplitFailure>(&result)) {
    throw std::invalid_argument("column " + format_word(c.word()) +
                                " is not admissible (split fails at y_" +
                                std::to_string(failure->index) + ")");
  }
  return std::get<SplitColumn>(std::move(result));
}

std::vector<Column> enumerate_columns(int n) {
  int const letters = 2 * n;
  std::vector<Column> out;
  for (int height = 0; height <= letters; ++height) {
    // Combinations of ranks in lexicographic order.
    std::vector<int> ranks(static_cast<std::size_t>(height));
    for (int j = 0; j < height; ++j) ranks[static_cast<std::size_t>(j)] = j + 1;
    for (;;) {
      Word w(n);
      for (int r : ranks) w.letters.push_back(Letter::from_rank(r, n));
      out.emplace_back(std::move(w));
      int j = height - 1;
      while (j >= 0 && ranks[static_cast<std::size_t>(j)] == letters - (height - 1 - j)) --j;
      if (j < 0) break;
      ++ranks[static_cast<std::size_t>(j)];
      for (int k = j + 1; k < height; ++k) {
        ranks[static_cast<std::size_t>(k)] = ranks[static_cast<std::size_t>(k - 1)] + 1;
      }
    }
  }
  return out;
}

std::vector<Column> enumerate_admissible(int n) {
  std::vector<Column> out;
  for (auto& c : enumerate_columns(n)) {
    if (!c.empty() && c.height() <= static_cast<std::size_t>(n) && is_admissible(c)) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace plactic
