#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "plactic/crystal.hpp"
#include "plactic/insertion.hpp"
#include "plactic/kernels.hpp"
#include "plactic/tableaux.hpp"

using namespace plactic;

namespace {

// Signature reduction by repeatedly deleting adjacent "+-" pairs.
std::optional<Word> oracle_apply(Word const& w, int i, bool raising) {
  int const n = w.n;
  std::string sig;
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Letter a = w.letters[k];
    char c = 0;
    if (i < n) {
      if (a == Letter::unbarred(i) || a == Letter::bar(i + 1)) c = '+';
      if (a == Letter::unbarred(i + 1) || a == Letter::bar(i)) c = '-';
    } else {
      if (a == Letter::unbarred(n)) c = '+';
      if (a == Letter::bar(n)) c = '-';
    }
    if (c) {
      sig += c;
      pos.push_back(k);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < sig.size(); ++k) {
      if (sig[k] == '+' && sig[k + 1] == '-') {
        sig.erase(k, 2);
        pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(k),
                  pos.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  std::optional<std::size_t> target;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    if (raising && sig[k] == '-') target = pos[k];
    if (!raising && sig[k] == '+' && !target) target = pos[k];
  }
  if (!target) return std::nullopt;
  Word out = w;
  Letter& a = out.letters[*target];
  if (i < n) {
    if (raising) {
      a = a.barred() ? Letter::bar(i + 1) : Letter::unbarred(i);
    } else {
      a = a.barred() ? Letter::bar(i) : Letter::unbarred(i + 1);
    }
  } else {
    a = raising ? Letter::unbarred(n) : Letter::bar(n);
  }
  return out;
}

}  // namespace

TEST_CASE("worked word") {
  auto const w = parse_word("-3 3 2 3 1 3 -3", 3);
  CHECK(raise(w, 2) == parse_word("-3 3 2 3 1 2 -3", 3));
  CHECK(lower(w, 2) == parse_word("-3 3 2 3 1 3 -2", 3));
  auto const red = reduce_signature(w, 2);
  CHECK(red.r() == 1);
  CHECK(red.s() == 1);
}

TEST_CASE("operators agree with an independent signature oracle") {
  for (int n = 1; n <= 3; ++n) {
    std::size_t const max_len = n == 3 ? 4 : 5;
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (std::uint64_t k = 0; k < count_words(len, n); ++k) {
        auto const w = word_from_index(k, len, n);
        for (int i = 1; i <= n; ++i) {
          REQUIRE(raise(w, i) == oracle_apply(w, i, true));
          REQUIRE(lower(w, i) == oracle_apply(w, i, false));
        }
      }
    }
  }
}

TEST_CASE("edge cases") {
  Word const empty(2);
  CHECK_FALSE(raise(empty, 1));
  CHECK_FALSE(lower(empty, 2));
  CHECK(is_highest_weight(empty));
  CHECK(weight(empty).d == std::vector<int>{0, 0});
  auto const one = parse_word("1", 2);
  CHECK(lower(one, 1) == parse_word("2", 2));
  CHECK(lower(parse_word("2", 2), 2) == parse_word("-2", 2));
  CHECK(lower(parse_word("-2", 2), 1) == parse_word("-1", 2));
  CHECK_FALSE(lower(parse_word("-1", 2), 1));
  CHECK(weight(parse_word("1 -1 2", 2)).d == std::vector<int>{0, 1});
  CHECK(weight(parse_word("1 1 2", 2)).fundamental_coordinates() == std::vector<int>{1, 1});
}

TEST_CASE("labels and components") {
  auto const a = parse_word("1 2 3 1", 3);
  auto const b = parse_word("1 1 2 3", 3);
  CHECK(is_highest_weight(a));
  CHECK(is_highest_weight(b));
  CHECK(crystal_label(a) == crystal_label(b));
  CHECK(crystal_equivalent(a, b));
  CHECK_FALSE(crystal_equivalent(a, parse_word("1 1 1 2", 3)));

  auto const g = component(parse_word("1", 2), 100);
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 3);
  auto const pair = component(parse_word("1 2", 2), 100);
  CHECK(pair.vertices.size() == 5);
  for (std::size_t i = 1; i < pair.vertices.size(); ++i) {
    CHECK_FALSE(crystal_equivalent(pair.vertices[i], pair.vertices.front()));
  }
  CHECK_THROWS_AS(component(parse_word("1 1 1", 2), 3), SizeLimitExceeded);
  auto const dot = to_dot(pair);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("v0 -> v1 [label=\"2\"];") != std::string::npos);
}

TEST_CASE("component vertices share one shape and have distinct labels") {
  auto const g = component(parse_word("2 1 -2", 2), 10'000);
  std::set<CrystalLabel> labels;
  for (auto const& v : g.vertices) {
    labels.insert(crystal_label(v));
    CHECK(crystal_label(v).highest_weight == crystal_label(g.vertices.front()).highest_weight);
    CHECK(shape_of(tableau_of_word(v)) == shape_of(tableau_of_word(g.vertices.front())));
  }
  CHECK(labels.size() == g.vertices.size());
}

TEST_CASE("operators are mutually inverse on sampled words for n = 3, 4") {
  for (int n = 3; n <= 4; ++n) {
    for (auto const& w : kernels::sample_words(n, 1, 8, 2'000, static_cast<std::uint64_t>(n))) {
      for (int i = 1; i <= n; ++i) {
        if (auto f = lower(w, i)) REQUIRE(raise(*f, i) == w);
        if (auto e = raise(w, i)) REQUIRE(lower(*e, i) == w);
        CHECK(epsilon(w, i) == static_cast<int>(reduce_signature(w, i).r()));
      }
    }
  }
}

TEST_CASE("crystal equivalence is an equivalence relation on sampled triples") {
  auto const words = kernels::sample_words(2, 3, 3, 300, 11);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int k = 0; k < 2'000; ++k) {
    auto const& a = words[pick(rng)];
    auto const& b = words[pick(rng)];
    auto const& c = words[pick(rng)];
    CHECK(crystal_equivalent(a, a));
    CHECK(crystal_equivalent(a, b) == crystal_equivalent(b, a));
    if (crystal_equivalent(a, b) && crystal_equivalent(b, c)) CHECK(crystal_equivalent(a, c));
  }
}

TEST_CASE("readings of tableaux of one shape form the component of the canonical tableau") {
  int const n = 2;
  std::vector<std::vector<int>> const shapes{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
                                              {3, 0}, {2, 1}, {4, 0}};
  for (auto const& lambda : shapes) {
    Shape const shape{lambda};
    std::set<Word> readings;
    for (auto const& t : enumerate_tableaux(shape, n)) readings.insert(reading(t));
    auto const g = component(reading(canonical_tableau(shape, n)), 100'000);
    std::set<Word> const vertices(g.vertices.begin(), g.vertices.end());
    CHECK(readings == vertices);
  }
}
