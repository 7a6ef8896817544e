#include "plactic/tableaux.hpp"

#include <algorithm>
#include <sstream>

namespace plactic {

bool column_leq(Column const& c1, Column const& c2) {
  if (c1.height() < c2.height()) return false;
  for (std::size_t row = 0; row < c2.height(); ++row) {
    if (c2[row] < c1[row]) return false;
  }
  return true;
}

bool column_preceq(Column const& c1, Column const& c2) {
  return column_leq(split_or_throw(c1).right, split_or_throw(c2).left);
}

std::size_t SymplecticTableau::size() const {
  std::size_t total = 0;
  for (auto const& c : columns_) total += c.height();
  return total;
}

SymplecticTableau SymplecticTableau::from_columns(int n, std::vector<Column> columns) {
  auto result = validate_tableau(n, std::move(columns));
  if (auto* bad = std::get_if<TableauViolation>(&result)) {
    throw std::invalid_argument("invalid symplectic tableau: " + bad->message);
  }
  return std::get<SymplecticTableau>(std::move(result));
}

std::variant<SymplecticTableau, TableauViolation> validate_tableau(int n,
                                                                   std::vector<Column> columns) {
  using Kind = TableauViolation::Kind;
  std::vector<SplitColumn> splits;
  splits.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].n() != n || columns[i].empty()) {
      return TableauViolation{Kind::alphabet, i,
                              "column " + std::to_string(i + 1) +
                                  " is empty or not over C_" + std::to_string(n)};
    }
    auto s = split(columns[i]);
    if (auto* failure = std::get_if<SplitFailure>(&s)) {
      return TableauViolation{Kind::not_admissible, i,
                              "column " + std::to_string(i + 1) + " (" +
                                  format_word(columns[i].word()) +
                                  ") is not admissible: split fails at y_" +
                                  std::to_string(failure->index)};
    }
    splits.push_back(std::get<SplitColumn>(std::move(s)));
  }
  for (std::size_t i = 0; i + 1 < columns.size(); ++i) {
    if (!column_leq(splits[i].right, splits[i + 1].left)) {
      return TableauViolation{Kind::not_compatible, i,
                              "columns " + std::to_string(i + 1) + " and " +
                                  std::to_string(i + 2) + " violate rC <= lC"};
    }
  }
  SymplecticTableau t(n);
  t.columns_ = std::move(columns);
  return t;
}

Word reading(SymplecticTableau const& t) {
  Word w(t.n());
  for (auto it = t.columns().rbegin(); it != t.columns().rend(); ++it) {
    w.letters.insert(w.letters.end(), it->word().begin(), it->word().end());
  }
  return w;
}

std::size_t Shape::boxes() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    total += static_cast<std::size_t>(lambda[i]) * (i + 1);
  }
  return total;
}

std::vector<int> Shape::rows() const {
  std::vector<int> out;
  for (std::size_t row = 0; row < lambda.size(); ++row) {
    int length = 0;
    for (std::size_t h = row; h < lambda.size(); ++h) length += lambda[h];
    if (length == 0) break;
    out.push_back(length);
  }
  return out;
}

Shape shape_of(SymplecticTableau const& t) {
  Shape s;
  s.lambda.assign(static_cast<std::size_t>(t.n()), 0);
  for (auto const& c : t.columns()) s.lambda[c.height() - 1]++;
  return s;
}

namespace {

std::vector<std::size_t> column_heights(Shape const& shape, int n) {
  if (shape.lambda.size() > static_cast<std::size_t>(n)) {
    for (std::size_t i = static_cast<std::size_t>(n); i < shape.lambda.size(); ++i) {
      if (shape.lambda[i] != 0) {
        throw std::invalid_argument("shape has columns taller than n = " + std::to_string(n));
      }
    }
  }
  std::vector<std::size_t> heights;
  for (std::size_t h = shape.lambda.size(); h-- > 0;) {
    if (shape.lambda[h] < 0) throw std::invalid_argument("negative shape multiplicity");
    for (int k = 0; k < shape.lambda[h]; ++k) heights.push_back(h + 1);
  }
  return heights;
}

}  // namespace

SymplecticTableau canonical_tableau(Shape const& shape, int n) {
  std::vector<Column> columns;
  for (std::size_t h : column_heights(shape, n)) {
    Word w(n);
    for (std::size_t k = 1; k <= h; ++k) w.letters.push_back(Letter::unbarred(static_cast<int>(k)));
    columns.emplace_back(std::move(w));
  }
  return SymplecticTableau::from_columns(n, std::move(columns));
}

std::vector<SymplecticTableau> enumerate_tableaux(Shape const& shape, int n) {
  auto heights = column_heights(shape, n);
  auto admissible = enumerate_admissible(n);
  std::vector<std::vector<Column>> by_height(static_cast<std::size_t>(n) + 1);
  for (auto const& c : admissible) by_height[c.height()].push_back(c);

  std::vector<SymplecticTableau> out;
  std::vector<Column> partial;
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == heights.size()) {
      out.push_back(SymplecticTableau::from_columns(n, partial));
      return;
    }
    for (auto const& c : by_height[heights[k]]) {
      if (k > 0 && !column_preceq(partial.back(), c)) continue;
      partial.push_back(c);
      self(self, k + 1);
      partial.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::string render_grid(SymplecticTableau const& t) {
  std::size_t rows = 0;
  for (auto const& c : t.columns()) rows = std::max(rows, c.height());
  std::ostringstream out;
  for (std::size_t row = 0; row < rows; ++row) {
    std::string line;
    for (auto const& c : t.columns()) {
      if (row >= c.height()) break;
      std::string cell = format_letter(c[row]);
      line += std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') + cell;
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace plactic
