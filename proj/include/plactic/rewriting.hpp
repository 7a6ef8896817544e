#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plactic/alphabet.hpp"
#include "plactic/columns.hpp"
#include "plactic/relations.hpp"
#include "plactic/tableaux.hpp"

namespace plactic {

// ---------------------------------------------------------------------------
// Generic string rewriting over integer symbols.

using Symbols = std::vector<int>;

struct RewriteRule {
  Symbols lhs;
  Symbols rhs;
  RelationFamily family = RelationFamily::completion;

  bool operator==(RewriteRule const&) const = default;
};

/// Strict order on symbol strings: returns true when a > b.
using TermOrder = std::function<bool(Symbols const&, Symbols const&)>;

/// Length first, then lexicographic from the left with the symbol order
/// reversed: among equal lengths, the string with the smaller first
/// differing symbol is the greater one.
bool reverse_deglex_greater(Symbols const& a, Symbols const& b);

/// Position of the first match of `pattern` in `s` at or after `from`.
std::optional<std::size_t> find_factor(Symbols const& s, Symbols const& pattern,
                                       std::size_t from = 0);

/// Replace s[pos, pos + length) by `replacement`.
Symbols replace_factor(Symbols const& s, std::size_t pos, std::size_t length,
                       Symbols const& replacement);

/// Rewrites with the leftmost applicable rule until irreducible. Throws
/// std::runtime_error past `max_steps`.
Symbols normalize(Symbols s, std::vector<RewriteRule> const& rules,
                  std::size_t max_steps = 1'000'000);

/// All strings one step away from `s`, using each rule in both directions.
std::vector<Symbols> undirected_neighbours(Symbols const& s, std::vector<RewriteRule> const& rules);

class ClosureLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Breadth-first search from `u` over undirected steps, keeping strings of
/// length at most `length_cap`; true when `v` is reached.
bool connected_within(Symbols const& u, Symbols const& v, std::vector<RewriteRule> const& rules,
                      std::size_t length_cap, std::size_t max_closure);

// ---------------------------------------------------------------------------
// Letter-level presentation.

Symbols to_symbols(Word const& w);  // letter ranks
Word from_symbols(Symbols const& s, int n);

bool reverse_deglex_greater(Word const& a, Word const& b);

/// Oriented instances of the defining relations over C_n: kappa, kappa',
/// xi, xi' and every contraction zeta_w.
std::vector<RewriteRule> sp_rules(int n);

/// Minimal non-admissible column words over C_n (length at most n + 1).
std::vector<Word> minimal_nonadmissible_words(int n);

/// Breadth-first closure of {u} under undirected relation steps, restricted
/// to words of length at most `length_cap`. Throws ClosureLimitExceeded
/// when the closure outgrows `max_closure`.
bool congruence_oracle(Word const& u, Word const& v, std::size_t length_cap,
                       std::size_t max_closure = 2'000'000);

/// Congruence classes of every word of length <= length_cap over C_n, as a
/// class id per word, indexed by (length, word_from_index).
struct CongruencePartition {
  int n;
  std::size_t length_cap;
  std::vector<std::uint64_t> offsets;  // offsets[L] = first id of length L
  std::vector<std::uint32_t> class_of;

  std::uint32_t class_id(Word const& w) const;
};

CongruencePartition congruence_partition(int n, std::size_t length_cap);

// ---------------------------------------------------------------------------
// Knuth-Bendix completion.

struct CompletionReport {
  bool closed = false;
  std::size_t rules_added = 0;
  std::size_t pairs_examined = 0;
  std::size_t unorientable = 0;
  std::vector<RewriteRule> added;   // every rule added, in order
  std::vector<RewriteRule> active;  // the system when the run stopped
  std::vector<std::pair<Symbols, Symbols>> unorientable_pairs;
};

CompletionReport kb_complete(std::vector<RewriteRule> rules, TermOrder const& order,
                             std::size_t max_rules, std::size_t max_pairs);

/// Knuth relations over the unbarred letters 1..m (type A): the kappa and
/// kappa' instances that avoid barred letters, as symbols 1..m.
std::vector<RewriteRule> type_a_knuth_rules(int m);

// ---------------------------------------------------------------------------
// Admissible column presentation.

/// c_u ⊏ c_v: shorter column first, equal heights by rank sequence.
bool generator_precedes(Word const& u, Word const& v);

enum class Strategy { leftmost, rightmost, random };

Strategy parse_strategy(std::string const& name);

struct NormalFormStats {
  std::size_t steps = 0;
  std::size_t order_violations = 0;
};

/// Column generators c_u (one per admissible column) and the rules
/// c_u c_v -> c_w c_w' read off P(uv). Generator ids follow ⊏, so ≺ on
/// sequences compares ids.
class AcolSystem {
 public:
  explicit AcolSystem(int n);

  int n() const { return n_; }
  std::size_t generator_count() const { return generators_.size(); }
  Column const& generator(int id) const { return generators_[static_cast<std::size_t>(id)]; }
  std::vector<Column> const& generators() const { return generators_; }
  int id_of(Column const& c) const;

  /// rhs of α_{u,v}, or nullopt when c_u c_v is already in normal form.
  std::optional<Symbols> const& rule(int u, int v) const {
    return table_[static_cast<std::size_t>(u) * generators_.size() + static_cast<std::size_t>(v)];
  }
  std::vector<RewriteRule> rules() const;

  /// ≺ on generator sequences.
  static bool sequence_precedes(Symbols const& h, Symbols const& g);

  /// Each letter becomes the height-one column it spells.
  Symbols embed(Word const& w) const;
  Word reading(Symbols const& h) const;

  Symbols normal_form(Symbols h, Strategy strategy, std::uint64_t seed = 0,
                      NormalFormStats* stats = nullptr, std::size_t max_steps = 1'000'000) const;

  /// Normal form read back as a symplectic tableau (columns left to right).
  SymplecticTableau to_tableau(Symbols const& normal) const;

 private:
  int n_;
  std::vector<Column> generators_;
  std::vector<std::optional<Symbols>> table_;
};

/// c_u c_v -> c_w c_w' with w the right and w' the left column of P(uv).
/// `rhs` holds 2, 1 or (for an annihilating pair such as 1 1̄) 0 column words.
struct AcolRule {
  Word u;
  Word v;
  std::vector<Word> rhs;

  bool annihilating() const { return rhs.empty(); }
};

/// α_{u,v}: nullopt iff V ⪯ U. Throws std::invalid_argument on a
/// non-admissible input and InsertionInvariantViolated if P(uv) has more
/// than two columns.
std::optional<AcolRule> acol_rule(Word const& u, Word const& v);

}  // namespace plactic
