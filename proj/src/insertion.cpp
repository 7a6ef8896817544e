#include "plactic/insertion.hpp"

#include "plactic/relations.hpp"

namespace plactic {

ColumnWordClass classify_column_word(Word const& w) {
  if (!is_column_word(w)) return ColumnWordClass::not_a_column;
  if (is_admissible(Column(w))) return ColumnWordClass::admissible_column;
  if (w.size() < 2) return ColumnWordClass::not_a_column;
  // Every factor of an admissible column is admissible, so the two maximal
  // strict factors decide the whole family.
  Word prefix(w.n, {w.begin(), w.end() - 1});
  Word suffix(w.n, {w.begin() + 1, w.end()});
  if (is_admissible(Column(prefix)) && is_admissible(Column(suffix))) {
    return ColumnWordClass::minimal_nonadmissible_column;
  }
  return ColumnWordClass::not_a_column;
}

Word contract(Word const& w) {
  if (classify_column_word(w) != ColumnWordClass::minimal_nonadmissible_column) {
    throw std::invalid_argument("contraction needs a minimal non-admissible column word, got " +
                                format_word(w));
  }
  Column c(w);
  auto counts = admissibility_counts(c);
  for (int z = 1; z <= w.n; ++z) {
    if (c.contains(Letter::unbarred(z)) && c.contains(Letter::bar(z)) &&
        counts[static_cast<std::size_t>(z - 1)] == z + 1) {
      Word out(w.n);
      for (Letter a : w) {
        if (a.value() != z) out.letters.push_back(a);
      }
      return out;
    }
  }
  throw InsertionInvariantViolated("no contractible pair in " + format_word(w));
}

Word bump_sweep(Word const& w) {
  Word cur = w;
  if (cur.size() < 3) {
    // Single-box column a with x <= a: already the reading of [x][a].
    return cur;
  }
  for (std::size_t start = cur.size() - 3;; --start) {
    Triple window{cur[start], cur[start + 1], cur[start + 2]};
    auto moves = window_moves(window, cur.n);
    if (moves.size() != 1) {
      throw InsertionInvariantViolated(
          std::to_string(moves.size()) + " relations apply to window " +
          format_word(Word(cur.n, {window.begin(), window.end()})) + " while bumping " +
          format_word(w));
    }
    for (std::size_t k = 0; k < 3; ++k) cur.letters[start + k] = moves.front().result[k];
    if (start == 0) break;
  }
  return cur;
}

ColumnInsertOutcome insert_into_column(Column const& c, Letter x) {
  if (!is_admissible(c)) {
    throw std::invalid_argument("insertion into non-admissible column " + format_word(c.word()));
  }
  Word w = c.word();
  w.letters.push_back(x);
  using Kind = ColumnInsertOutcome::Kind;
  switch (classify_column_word(w)) {
    case ColumnWordClass::admissible_column:
      return {Kind::extended, Column(std::move(w)), std::nullopt};
    case ColumnWordClass::minimal_nonadmissible_column:
      return {Kind::contracted, Column(contract(w)), std::nullopt};
    case ColumnWordClass::not_a_column:
      break;
  }
  if (is_column_word(w)) {
    throw InsertionInvariantViolated("column word " + format_word(w) +
                                     " is neither admissible nor minimally non-admissible");
  }
  Word swept = bump_sweep(w);
  Word rest(w.n, {swept.begin() + 1, swept.end()});
  if (!is_column_word(rest) || !is_admissible(Column(rest))) {
    throw InsertionInvariantViolated("bumping " + format_word(w) + " left " + format_word(rest) +
                                     ", not an admissible column");
  }
  return {Kind::bumped, Column(std::move(rest)), swept[0]};
}

namespace {

// Inserts x into the tableau made of columns[k..]. During reinsertion of a
// contracted column no further contraction may occur.
void insert_at(std::vector<Column>& columns, std::size_t k, Letter x, int n, bool reinserting) {
  if (k == columns.size()) {
    columns.emplace_back(Word(n, {x}));
    return;
  }
  auto outcome = insert_into_column(columns[k], x);
  using Kind = ColumnInsertOutcome::Kind;
  switch (outcome.kind) {
    case Kind::extended:
      columns[k] = std::move(outcome.column);
      return;
    case Kind::contracted: {
      if (reinserting) {
        throw InsertionInvariantViolated("reinsertion of a contracted column contracted again");
      }
      columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(k));
      for (Letter y : outcome.column.word()) insert_at(columns, k, y, n, true);
      return;
    }
    case Kind::bumped:
      columns[k] = std::move(outcome.column);
      insert_at(columns, k + 1, *outcome.bumped, n, reinserting);
      return;
  }
}

}  // namespace

SymplecticTableau insert_into_tableau(SymplecticTableau const& t, Letter x) {
  if (x.value() < 1 || x.value() > t.n()) {
    throw std::invalid_argument("letter " + format_letter(x) + " outside C_" +
                                std::to_string(t.n()));
  }
  auto columns = t.columns();
  insert_at(columns, 0, x, t.n(), false);
  auto result = validate_tableau(t.n(), std::move(columns));
  if (auto* bad = std::get_if<TableauViolation>(&result)) {
    throw InsertionInvariantViolated("insertion produced an invalid tableau: " + bad->message);
  }
  return std::get<SymplecticTableau>(std::move(result));
}

SymplecticTableau tableau_of_word(Word const& w) {
  SymplecticTableau t(w.n);
  for (Letter x : w) t = insert_into_tableau(t, x);
  return t;
}

}  // namespace plactic
