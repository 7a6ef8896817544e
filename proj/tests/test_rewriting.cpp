#include <algorithm>
#include <set>

#include "doctest.h"
#include "plactic/insertion.hpp"
#include "plactic/relations.hpp"
#include "plactic/rewriting.hpp"

using namespace plactic;

namespace {

Word w(std::string const& text, int n) { return parse_word(text, n); }

bool order(Symbols const& a, Symbols const& b) { return reverse_deglex_greater(a, b); }

}  // namespace

TEST_CASE("string primitives") {
  Symbols const s{1, 2, 3, 2, 3};
  CHECK(find_factor(s, {2, 3}) == 1u);
  CHECK(find_factor(s, {2, 3}, 2) == 3u);
  CHECK_FALSE(find_factor(s, {3, 1}));
  CHECK(find_factor(s, {}) == 0u);
  CHECK(replace_factor(s, 1, 2, {9}) == Symbols{1, 9, 2, 3});
  CHECK(replace_factor(s, 0, 5, {}) == Symbols{});
  std::vector<RewriteRule> const rules{{{2, 1}, {1, 2}}};
  CHECK(normalize({2, 2, 1, 1}, rules) == Symbols{1, 1, 2, 2});
}

TEST_CASE("term order") {
  CHECK(order({1, 1, 1}, {2, 2}));
  CHECK(order({1, 3, 2}, {3, 1, 2}));
  CHECK_FALSE(order({3, 1, 2}, {1, 3, 2}));
  CHECK_FALSE(order({1, 2}, {1, 2}));
  CHECK(reverse_deglex_greater(w("2 -2 1", 2), w("-1 1 1", 2)));
}

TEST_CASE("relation instances are oriented downwards") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& r : sp_rules(n)) {
      CHECK(order(r.lhs, r.rhs));
      CHECK(tableau_of_word(from_symbols(r.lhs, n)) == tableau_of_word(from_symbols(r.rhs, n)));
    }
  }
}

TEST_CASE("window moves are exactly the length-3 R1/R2 instances") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::pair<Symbols, Symbols>> from_rules;
    for (auto const& r : sp_rules(n)) {
      if (r.family == RelationFamily::zeta) continue;
      REQUIRE(r.lhs.size() == 3);
      from_rules.insert({r.lhs, r.rhs});
    }
    std::set<std::pair<Symbols, Symbols>> from_windows;
    for (std::uint64_t k = 0; k < count_words(3, n); ++k) {
      auto const x = word_from_index(k, 3, n);
      Triple const t{x.letters[0], x.letters[1], x.letters[2]};
      for (auto const& m : window_moves(t, n)) {
        Word const y(n, {m.result.begin(), m.result.end()});
        if (m.oriented) {
          from_windows.insert({to_symbols(x), to_symbols(y)});
        } else {
          CHECK(from_rules.count({to_symbols(y), to_symbols(x)}) == 1);
        }
      }
    }
    CHECK(from_windows == from_rules);
  }
}

TEST_CASE("minimal non-admissible words") {
  auto const words = minimal_nonadmissible_words(1);
  REQUIRE(words.size() == 1);
  CHECK(words[0] == w("1 -1", 1));
  for (auto const& x : minimal_nonadmissible_words(3)) CHECK(x.size() <= 4);
}

TEST_CASE("congruence oracle") {
  CHECK(congruence_oracle(w("1 2 3 1", 3), w("1 1 2 3", 3), 4));
  CHECK_FALSE(congruence_oracle(w("1 2", 2), w("2 1", 2), 4));
  CHECK(congruence_oracle(w("1 -1", 1), Word(1), 2));
  CHECK_THROWS_AS(congruence_oracle(w("1 2 1 2 1 2", 2), w("2", 2), 8, 10), ClosureLimitExceeded);
}

TEST_CASE("completion closes a convergent system without adding rules") {
  std::vector<RewriteRule> const commute{{{1, 2}, {2, 1}}, {{1, 3}, {3, 1}}, {{2, 3}, {3, 2}}};
  auto const r = kb_complete(commute, order, 10, 100);
  CHECK(r.closed);
  CHECK(r.rules_added == 0);
}

TEST_CASE("completion adds the missing consequence") {
  std::vector<RewriteRule> const rules{{{1, 2, 1}, {2}}};
  auto const r = kb_complete(rules, order, 20, 200);
  REQUIRE(r.closed);
  // Every word up to length 5 has one normal form per congruence class.
  std::vector<Symbols> words;
  for (std::size_t len = 0; len <= 4; ++len) {
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      Symbols s;
      for (std::size_t i = 0; i < len; ++i) s.push_back(((mask >> i) & 1) + 1);
      words.push_back(s);
    }
  }
  for (auto const& a : words) {
    for (auto const& b : words) {
      if (a.size() < b.size()) continue;
      bool const same_nf = normalize(a, r.active) == normalize(b, r.active);
      if (connected_within(a, b, rules, 7, 100'000)) CHECK(same_nf);
    }
  }
}

TEST_CASE("bounded type-A completion produces the divergent family early") {
  auto const r = kb_complete(type_a_knuth_rules(4), order, 40, 2'000);
  CHECK_FALSE(r.closed);
  auto has = [&](Symbols const& lhs, Symbols const& rhs) {
    return std::any_of(r.added.begin(), r.added.end(),
                       [&](RewriteRule const& x) { return x.lhs == lhs && x.rhs == rhs; });
  };
  CHECK(has({2, 3, 2, 1, 2, 4}, {2, 3, 4, 2, 1, 2}));
  CHECK(has({2, 3, 2, 2, 1, 2, 4}, {2, 3, 4, 2, 2, 1, 2}));
  for (auto const& x : r.added) CHECK(order(x.lhs, x.rhs));
}

TEST_CASE("type-A Knuth rules use unbarred letters only") {
  for (auto const& r : type_a_knuth_rules(3)) {
    for (int s : r.lhs) CHECK(s <= 3);
    for (int s : r.rhs) CHECK(s <= 3);
  }
}

TEST_CASE("column rules from insertion") {
  auto const a = acol_rule(w("1 3", 3), w("2", 3));
  REQUIRE(a);
  REQUIRE(a->rhs.size() == 2);
  CHECK(a->rhs[0] == w("3", 3));
  CHECK(a->rhs[1] == w("1 2", 3));

  auto const b = acol_rule(w("1", 3), w("3", 3));
  REQUIRE(b);
  REQUIRE(b->rhs.size() == 1);
  CHECK(b->rhs[0] == w("1 3", 3));

  CHECK_FALSE(acol_rule(w("1", 3), w("1 2", 3)));
  auto const empty = acol_rule(w("1", 1), w("-1", 1));
  REQUIRE(empty);
  CHECK(empty->annihilating());
  CHECK_THROWS_AS(acol_rule(w("1 -1", 2), w("1", 2)), std::invalid_argument);
}

TEST_CASE("column system sizes") {
  CHECK(AcolSystem(1).rules().size() == 1);
  CHECK(AcolSystem(2).rules().size() == 41);
  CHECK(AcolSystem(3).rules().size() == 701);
  CHECK(AcolSystem(4).rules().size() == 10459);
  AcolSystem const s(2);
  CHECK(s.generator_count() == 9);
  for (std::size_t i = 0; i + 1 < s.generator_count(); ++i) {
    CHECK(generator_precedes(s.generator(static_cast<int>(i)).word(),
                             s.generator(static_cast<int>(i) + 1).word()));
  }
  for (auto const& c : s.generators()) CHECK(s.generator(s.id_of(c)) == c);
}

TEST_CASE("sequence order") {
  CHECK(AcolSystem::sequence_precedes({}, {0}));
  CHECK(AcolSystem::sequence_precedes({5}, {0, 0}));
  CHECK(AcolSystem::sequence_precedes({0, 5}, {1, 0}));
  CHECK_FALSE(AcolSystem::sequence_precedes({1, 0}, {1, 0}));
}

TEST_CASE("normal forms") {
  AcolSystem const s(3);
  auto const h = s.embed(w("1 3 2", 3));
  CHECK(h.size() == 3);
  CHECK(s.reading(h) == w("1 3 2", 3));
  NormalFormStats stats;
  auto const nf = s.normal_form(h, Strategy::leftmost, 0, &stats);
  CHECK(s.reading(nf) == w("3 1 2", 3));
  CHECK(s.to_tableau(nf) == tableau_of_word(w("1 3 2", 3)));
  CHECK(stats.order_violations == 0);
  CHECK(stats.steps > 0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(s.normal_form(h, Strategy::random, seed) == nf);
  }
  CHECK(s.normal_form({}, Strategy::rightmost).empty());
  CHECK(parse_strategy("seeded-random") == Strategy::random);
  CHECK_THROWS_AS(parse_strategy("outermost"), std::invalid_argument);
}

TEST_CASE("congruence partition matches P for short words") {
  auto const part = congruence_partition(2, 5);
  for (std::size_t len = 1; len <= 3; ++len) {
    for (std::uint64_t i = 0; i < count_words(len, 2); ++i) {
      for (std::uint64_t j = 0; j < count_words(len, 2); ++j) {
        auto const a = word_from_index(i, len, 2);
        auto const b = word_from_index(j, len, 2);
        CHECK((part.class_id(a) == part.class_id(b)) == (tableau_of_word(a) == tableau_of_word(b)));
      }
    }
  }
}
