#pragma once

#include <optional>
#include <stdexcept>

#include "plactic/tableaux.hpp"

namespace plactic {

enum class ColumnWordClass { admissible_column, minimal_nonadmissible_column, not_a_column };

/// Exact three-way split used by the insertion cases. A minimal
/// non-admissible column is strictly increasing, not admissible, and every
/// strict factor is an admissible column word.
ColumnWordClass classify_column_word(Word const& w);

/// Contraction: erase the pair (z, z̄) where z is the least unbarred value
/// with both z and z̄ present and N(z) = z + 1. Requires a minimal
/// non-admissible column word; throws std::invalid_argument otherwise.
Word contract(Word const& w);

/// Raised when an internal claim of the bumping procedure fails to hold.
class InsertionInvariantViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ColumnInsertOutcome {
  enum class Kind { extended, contracted, bumped };
  Kind kind;
  Column column;
  std::optional<Letter> bumped;  // the letter leaving for the next column
};

/// x -> C for an admissible column C.
ColumnInsertOutcome insert_into_column(Column const& c, Letter x);

/// Right-to-left sweep of overlapping length-3 windows used in the bumped
/// case. Exposed for tests; `w` must not be a column word.
Word bump_sweep(Word const& w);

/// x -> T.
SymplecticTableau insert_into_tableau(SymplecticTableau const& t, Letter x);

/// P(w): fold of insert_into_tableau over w from the empty tableau.
SymplecticTableau tableau_of_word(Word const& w);

}  // namespace plactic
