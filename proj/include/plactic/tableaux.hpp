#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plactic/columns.hpp"

namespace plactic {

/// C1 <= C2: C1 at least as tall and top-aligned rows weakly increase.
bool column_leq(Column const& c1, Column const& c2);

/// C1 ⪯ C2: rC1 <= lC2. Throws std::invalid_argument on a non-admissible column.
bool column_preceq(Column const& c1, Column const& c2);

struct TableauViolation;

/// Columns left to right; every column admissible and each consecutive pair
/// related by ⪯. Construct through validate_tableau() or from_columns().
class SymplecticTableau {
 public:
  explicit SymplecticTableau(int n = 1) : n_(n) {}

  int n() const { return n_; }
  std::vector<Column> const& columns() const { return columns_; }
  std::size_t width() const { return columns_.size(); }
  bool empty() const { return columns_.empty(); }
  std::size_t size() const;

  /// Throws std::invalid_argument with the violation message.
  static SymplecticTableau from_columns(int n, std::vector<Column> columns);

  bool operator==(SymplecticTableau const&) const = default;
  auto operator<=>(SymplecticTableau const&) const = default;

 private:
  friend std::variant<SymplecticTableau, TableauViolation> validate_tableau(
      int n, std::vector<Column> columns);
  int n_;
  std::vector<Column> columns_;
};

struct TableauViolation {
  enum class Kind { alphabet, not_admissible, not_compatible };
  Kind kind;
  std::size_t column;  // offending column, or left column of the offending pair
  std::string message;
};

std::variant<SymplecticTableau, TableauViolation> validate_tableau(int n,
                                                                   std::vector<Column> columns);

/// w(C_r) ... w(C_1).
Word reading(SymplecticTableau const& t);

/// λ_i = number of columns of height i, i = 1..n.
struct Shape {
  std::vector<int> lambda;

  std::size_t boxes() const;
  /// Row lengths top to bottom.
  std::vector<int> rows() const;
  bool operator==(Shape const&) const = default;
};

Shape shape_of(SymplecticTableau const& t);

/// Tableau of shape λ with row k filled by the letter k.
SymplecticTableau canonical_tableau(Shape const& shape, int n);

/// All symplectic tableaux of the given shape over C_n.
std::vector<SymplecticTableau> enumerate_tableaux(Shape const& shape, int n);

/// ASCII grid, one row per line, barred letters as -k.
std::string render_grid(SymplecticTableau const& t);

}  // namespace plactic
