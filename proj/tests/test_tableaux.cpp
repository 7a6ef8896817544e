#include "doctest.h"
#include "plactic/insertion.hpp"
#include "plactic/tableaux.hpp"

using namespace plactic;

namespace {

std::vector<Column> cols(int n, std::vector<std::string> const& texts) {
  std::vector<Column> out;
  for (auto const& t : texts) out.emplace_back(parse_word(t, n));
  return out;
}

}  // namespace

TEST_CASE("worked symplectic tableau") {
  auto const t = SymplecticTableau::from_columns(3, cols(3, {"1 2 3", "2 -3 -2", "3"}));
  CHECK(reading(t) == parse_word("3 2 -3 -2 1 2 3", 3));
  CHECK(t.size() == 7);
  CHECK(shape_of(t).lambda == std::vector<int>{1, 0, 2});
  CHECK(shape_of(t).rows() == std::vector<int>{3, 2, 2});
  CHECK(render_grid(t) == "  1  2  3\n  2 -3\n  3 -2\n");
}

TEST_CASE("column relations") {
  auto const c = cols(3, {"1 2 3", "2 -3 -2", "3", "2 3"});
  CHECK(column_leq(c[0], c[1]));
  CHECK(column_preceq(c[0], c[1]));
  CHECK(column_preceq(c[1], c[2]));
  CHECK_FALSE(column_leq(c[2], c[0]));
  CHECK_FALSE(column_preceq(c[3], c[0]));
  CHECK_THROWS_AS(column_preceq(Column(parse_word("1 -1", 3)), c[0]), std::invalid_argument);
}

TEST_CASE("validation reports the offending column") {
  auto const bad = validate_tableau(2, cols(2, {"1 -1"}));
  REQUIRE(std::holds_alternative<TableauViolation>(bad));
  CHECK(std::get<TableauViolation>(bad).kind == TableauViolation::Kind::not_admissible);
  auto const order = validate_tableau(2, cols(2, {"2", "1"}));
  REQUIRE(std::holds_alternative<TableauViolation>(order));
  CHECK(std::get<TableauViolation>(order).kind == TableauViolation::Kind::not_compatible);
  CHECK(std::get<TableauViolation>(order).column == 0);
  auto const mixed = validate_tableau(2, cols(3, {"1"}));
  REQUIRE(std::holds_alternative<TableauViolation>(mixed));
  CHECK(std::get<TableauViolation>(mixed).kind == TableauViolation::Kind::alphabet);
  CHECK_THROWS_AS(SymplecticTableau::from_columns(2, cols(2, {"2", "1"})), std::invalid_argument);
  CHECK(SymplecticTableau::from_columns(2, {}).empty());
}

TEST_CASE("enumeration by shape agrees with filtering all column sequences") {
  std::vector<std::pair<int, std::vector<int>>> const cases{
      {1, {1}}, {1, {3}}, {2, {1, 0}}, {2, {0, 1}}, {2, {1, 1}}, {2, {2, 1}}, {2, {0, 2}}, {2, {3, 0}}};
  for (auto const& [n, lambda] : cases) {
    Shape const shape{lambda};
    std::vector<int> heights;
    for (int h = n; h >= 1; --h) heights.insert(heights.end(), lambda[h - 1], h);
    auto const admissible = enumerate_admissible(n);
    std::size_t expected = 0;
    std::vector<Column> partial;
    auto extend = [&](auto&& self, std::size_t k) -> void {
      if (k == heights.size()) {
        ++expected;
        return;
      }
      for (auto const& c : admissible) {
        if (static_cast<int>(c.height()) != heights[k]) continue;
        if (k > 0 && !column_preceq(partial.back(), c)) continue;
        partial.push_back(c);
        self(self, k + 1);
        partial.pop_back();
      }
    };
    extend(extend, 0);
    auto const found = enumerate_tableaux(shape, n);
    CHECK(found.size() == expected);
    for (auto const& t : found) CHECK(shape_of(t) == shape);
  }
}

TEST_CASE("canonical tableau") {
  auto const t = canonical_tableau(Shape{{1, 1}}, 2);
  CHECK(t.columns()[0].word() == parse_word("1 2", 2));
  CHECK(t.columns()[1].word() == parse_word("1", 2));
  CHECK(tableau_of_word(reading(t)) == t);
}

TEST_CASE("compatibility is transitive on admissible columns") {
  for (int n = 1; n <= 3; ++n) {
    auto const cs = enumerate_admissible(n);
    for (auto const& a : cs) {
      for (auto const& b : cs) {
        if (!column_preceq(a, b)) continue;
        for (auto const& c : cs) {
          if (column_preceq(b, c)) CHECK(column_preceq(a, c));
        }
      }
    }
  }
}
