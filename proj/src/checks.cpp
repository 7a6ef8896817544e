#include "plactic/checks.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "plactic/crystal.hpp"
#include "plactic/insertion.hpp"
#include "plactic/kernels.hpp"
#include "plactic/rewriting.hpp"

namespace plactic {

using nlohmann::json;

void CheckReport::record(bool passed, json const& witness_if_failed) {
  ++cases;
  if (passed) {
    ++passes;
  } else {
    ++failures;
    if (!witness) witness = witness_if_failed;
  }
}

void to_json(json& j, CheckReport const& r) {
  j = json{{"suite", r.suite},       {"universe", r.universe}, {"cases", r.cases},
           {"passes", r.passes},     {"failures", r.failures}, {"details", r.details},
           {"witness", r.witness ? *r.witness : json(nullptr)}};
}

void from_json(json const& j, CheckReport& r) {
  j.at("suite").get_to(r.suite);
  j.at("universe").get_to(r.universe);
  j.at("cases").get_to(r.cases);
  j.at("passes").get_to(r.passes);
  j.at("failures").get_to(r.failures);
  r.details = j.value("details", json::object());
  if (j.contains("witness") && !j.at("witness").is_null()) {
    r.witness = j.at("witness");
  } else {
    r.witness.reset();
  }
}

namespace {

std::string universe_text(int n, std::size_t max_len) {
  return "n=" + std::to_string(n) + ", 1<=|w|<=" + std::to_string(max_len);
}

CheckReport begin_report(std::string suite, std::string universe) {
  CheckReport r;
  r.suite = std::move(suite);
  r.universe = std::move(universe);
  return r;
}

std::string fmt(Word const& w) { return "[" + format_word(w) + "]"; }

std::string fmt(SymplecticTableau const& t) {
  std::string out;
  for (auto const& c : t.columns()) out += fmt(c.word());
  return out.empty() ? "[]" : out;
}

// Index of the first word in each word's class.
std::vector<std::size_t> representatives(std::vector<std::uint32_t> const& ids) {
  std::map<std::uint32_t, std::size_t> first;
  std::vector<std::size_t> out(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) out[i] = first.emplace(ids[i], i).first->second;
  return out;
}

std::uint64_t universe_size(int n, std::size_t max_len) {
  std::uint64_t total = 0;
  for (std::size_t len = 1; len <= max_len; ++len) total += count_words(len, n);
  return total;
}

std::vector<std::vector<Column>> all_tableau_columns(int n, std::size_t max_columns) {
  auto admissible = enumerate_admissible(n);
  std::vector<std::vector<Column>> out{{}};
  std::vector<Column> partial;
  auto extend = [&](auto&& self) -> void {
    if (partial.size() == max_columns) return;
    for (auto const& c : admissible) {
      if (!partial.empty() && !column_preceq(partial.back(), c)) continue;
      partial.push_back(c);
      out.push_back(partial);
      self(self);
      partial.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace

CheckReport run_cross_section_check(int n, std::size_t max_len, std::uint64_t budget) {
  auto const estimate = universe_size(n, max_len);
  if (estimate > budget) {
    throw BudgetExceeded("cross-section universe has " + std::to_string(estimate) +
                             " words, budget is " + std::to_string(budget),
                         estimate);
  }
  auto report = begin_report("cross-section", universe_text(n, max_len));
  auto const words = kernels::word_universe_parallel(n, 1, max_len);
  AcolSystem const system(n);
  auto const tableaux = kernels::tableaux_parallel(words);
  auto const normals = kernels::normal_forms_parallel(system, words, Strategy::leftmost);
  auto const labels = kernels::crystal_labels_parallel(words);

  auto const by_p = kernels::partition_ids(tableaux);
  auto const by_nf = kernels::partition_ids(normals);
  auto const by_crystal = kernels::partition_ids(labels);
  auto const rep_p = representatives(by_p);
  auto const rep_nf = representatives(by_nf);
  auto const rep_crystal = representatives(by_crystal);

  for (std::size_t i = 0; i < words.size(); ++i) {
    bool const same_partition = rep_p[i] == rep_nf[i] && rep_p[i] == rep_crystal[i];
    bool const nf_is_p = system.to_tableau(normals[i]) == tableaux[i];
    json witness;
    if (!same_partition || !nf_is_p) {
      witness = {{"word", format_word(words[i])},
                 {"P", fmt(tableaux[i])},
                 {"normal_form", fmt(system.to_tableau(normals[i]))},
                 {"representative_by_P", format_word(words[rep_p[i]])},
                 {"representative_by_normal_form", format_word(words[rep_nf[i]])},
                 {"representative_by_crystal", format_word(words[rep_crystal[i]])}};
    }
    report.record(same_partition && nf_is_p, witness);
  }
  auto classes = [](std::vector<std::uint32_t> const& ids) {
    return ids.empty() ? 0u : *std::max_element(ids.begin(), ids.end()) + 1;
  };
  report.details = {{"words", words.size()},
                    {"classes_by_P", classes(by_p)},
                    {"classes_by_normal_form", classes(by_nf)},
                    {"classes_by_crystal", classes(by_crystal)},
                    {"threads", kernels::thread_count()}};
  return report;
}

CheckReport run_congruence_check(int n, std::size_t max_len, std::size_t slack) {
  auto report = begin_report("congruence", universe_text(n, max_len) + ", closure cap " +
                                       std::to_string(max_len + slack));
  auto const partition = congruence_partition(n, max_len + slack);
  auto const words = kernels::word_universe(n, 1, max_len);
  auto const tableaux = kernels::tableaux_parallel(words);
  std::vector<std::uint32_t> by_congruence;
  by_congruence.reserve(words.size());
  for (auto const& w : words) by_congruence.push_back(partition.class_id(w));
  auto const rep_p = representatives(kernels::partition_ids(tableaux));
  auto const rep_c = representatives(kernels::partition_ids(by_congruence));
  for (std::size_t i = 0; i < words.size(); ++i) {
    // reading(P(w)) must also be congruent to w.
    auto const r = reading(tableaux[i]);
    bool const reading_congruent = partition.class_id(r) == by_congruence[i];
    bool const ok = rep_p[i] == rep_c[i] && reading_congruent;
    json witness;
    if (!ok) {
      witness = {{"word", format_word(words[i])},
                 {"P", fmt(tableaux[i])},
                 {"representative_by_P", format_word(words[rep_p[i]])},
                 {"representative_by_congruence", format_word(words[rep_c[i]])},
                 {"reading_congruent", reading_congruent}};
    }
    report.record(ok, witness);
  }
  return report;
}

CheckReport run_lemma_checks(int n) {
  auto report = begin_report("structural-lemmas", "n=" + std::to_string(n) + ", admissible pairs");
  auto const columns = enumerate_admissible(n);
  std::uint64_t skipped = 0;
  std::uint64_t one_column = 0;
  std::uint64_t two_columns = 0;
  for (auto const& u : columns) {
    for (auto const& v : columns) {
      if (column_preceq(v, u)) {
        ++skipped;
        continue;
      }
      auto const p = tableau_of_word(concat(u.word(), v.word()));
      bool ok = p.width() <= 2;
      if (p.width() == 2) {
        ok = ok && p.columns()[1].height() < u.height();
        ++two_columns;
      } else {
        ++one_column;
      }
      report.record(ok, json{{"u", format_word(u.word())},
                             {"v", format_word(v.word())},
                             {"P", fmt(p)}});
    }
  }
  report.details = {{"skipped_normal_pairs", skipped},
                    {"one_column_results", one_column},
                    {"two_column_results", two_columns}};
  return report;
}

CheckReport run_confluence_check(int n, std::size_t max_len,
                                 std::vector<std::uint64_t> const& seeds, std::size_t sample,
                                 std::uint64_t sample_seed) {
  std::string universe = sample == 0 ? universe_text(n, max_len)
                                     : universe_text(n, max_len) + ", " + std::to_string(sample) +
                                           " sampled words (seed " +
                                           std::to_string(sample_seed) + ")";
  auto report = begin_report("convergence", universe);
  auto const words = sample == 0 ? kernels::word_universe_parallel(n, 1, max_len)
                                 : kernels::sample_words(n, 1, max_len, sample, sample_seed);
  AcolSystem const system(n);

  struct Outcome {
    bool agree = true;
    std::size_t violations = 0;
    std::size_t steps = 0;
    std::string detail;
  };
  auto outcomes = kernels::map_parallel<Outcome>(words.size(), [&](std::size_t i) {
    Outcome out;
    auto const h = system.embed(words[i]);
    NormalFormStats stats;
    auto const reference = system.normal_form(h, Strategy::leftmost, 0, &stats);
    auto compare = [&](Symbols const& other, std::string const& name) {
      if (other != reference && out.agree) {
        out.agree = false;
        out.detail = name + " gives " + format_word(system.reading(other)) + " vs leftmost " +
                     format_word(system.reading(reference));
      }
    };
    compare(system.normal_form(h, Strategy::rightmost, 0, &stats), "rightmost");
    for (auto seed : seeds) {
      compare(system.normal_form(h, Strategy::random, seed, &stats),
              "random(" + std::to_string(seed) + ")");
    }
    out.violations = stats.order_violations;
    out.steps = stats.steps;
    return out;
  });

  std::uint64_t steps = 0;
  std::uint64_t violations = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    steps += outcomes[i].steps;
    violations += outcomes[i].violations;
    report.record(outcomes[i].agree && outcomes[i].violations == 0,
                  json{{"word", format_word(words[i])},
                       {"disagreement", outcomes[i].detail},
                       {"order_violations", outcomes[i].violations}});
  }
  report.details = {{"rewriting_steps", steps}, {"order_violations", violations}};
  return report;
}

CheckReport run_sheats_check(int n) {
  auto report = begin_report("sheats", "n=" + std::to_string(n) + ", every strictly increasing column");
  std::uint64_t admissible = 0;
  for (auto const& c : enumerate_columns(n)) {
    bool const by_counts = is_admissible(c);
    auto const s = split(c);
    bool const splittable = std::holds_alternative<SplitColumn>(s);
    bool ok = by_counts == splittable;
    if (splittable) {
      auto const& sc = std::get<SplitColumn>(s);
      ok = ok && sc.left.height() == c.height() && sc.right.height() == c.height() &&
           column_leq(sc.left, c) && column_leq(c, sc.right) &&
           c.height() <= static_cast<std::size_t>(n);
    }
    if (by_counts && !c.empty()) ++admissible;
    report.record(ok, json{{"column", format_word(c.word())},
                           {"admissible_by_counts", by_counts},
                           {"splits", splittable}});
  }
  report.details = {{"admissible_nonempty_columns", admissible}};
  return report;
}

CheckReport run_orientation_check(int n) {
  auto report = begin_report("orientation", "n=" + std::to_string(n));
  std::uint64_t letter_rules = 0;
  for (auto const& r : sp_rules(n)) {
    ++letter_rules;
    report.record(reverse_deglex_greater(r.lhs, r.rhs),
                  json{{"family", std::string(family_name(r.family))},
                       {"lhs", format_word(from_symbols(r.lhs, n))},
                       {"rhs", format_word(from_symbols(r.rhs, n))}});
  }
  AcolSystem const system(n);
  std::uint64_t column_rules = 0;
  for (auto const& r : system.rules()) {
    ++column_rules;
    bool irreducible = true;
    for (std::size_t i = 0; i + 1 < r.rhs.size(); ++i) {
      if (system.rule(r.rhs[i], r.rhs[i + 1])) irreducible = false;
    }
    bool const decreasing = AcolSystem::sequence_precedes(r.rhs, r.lhs);
    report.record(irreducible && decreasing,
                  json{{"lhs", format_word(system.reading(r.lhs))},
                       {"rhs", format_word(system.reading(r.rhs))},
                       {"irreducible", irreducible},
                       {"decreasing", decreasing}});
  }
  report.details = {{"letter_rules", letter_rules}, {"column_rules", column_rules}};
  return report;
}

CheckReport run_tietze_check(int n) {
  auto report = begin_report("tietze", "n=" + std::to_string(n));
  AcolSystem const system(n);
  std::map<std::string, std::uint64_t> per_family;
  auto nf = [&](Word const& w) { return system.normal_form(system.embed(w), Strategy::leftmost); };
  for (auto const& r : sp_rules(n)) {
    auto const lhs = from_symbols(r.lhs, n);
    auto const rhs = from_symbols(r.rhs, n);
    per_family[std::string(family_name(r.family))]++;
    report.record(nf(lhs) == nf(rhs), json{{"family", std::string(family_name(r.family))},
                                           {"lhs", format_word(lhs)},
                                           {"rhs", format_word(rhs)}});
  }
  for (auto const& c : system.generators()) {
    per_family["gamma"]++;
    report.record(nf(c.word()) == Symbols{system.id_of(c)},
                  json{{"family", "gamma"}, {"column", format_word(c.word())}});
  }
  report.details = per_family;
  return report;
}

CheckReport run_local_confluence_check(int n, std::size_t sample, std::uint64_t seed) {
  AcolSystem const system(n);
  auto const g = static_cast<int>(system.generator_count());
  std::vector<std::array<int, 3>> triples;
  for (int u = 0; u < g; ++u) {
    for (int v = 0; v < g; ++v) {
      if (!system.rule(u, v)) continue;
      for (int t = 0; t < g; ++t) {
        if (system.rule(v, t)) triples.push_back({u, v, t});
      }
    }
  }
  std::string universe = "n=" + std::to_string(n) + ", critical triples";
  if (sample != 0 && sample < triples.size()) {
    std::mt19937_64 rng(seed);
    std::shuffle(triples.begin(), triples.end(), rng);
    triples.resize(sample);
    universe += " (" + std::to_string(sample) + " sampled, seed " + std::to_string(seed) + ")";
  }
  auto report = begin_report("local-confluence", universe);
  auto const results = kernels::map_parallel<char>(triples.size(), [&](std::size_t k) {
    auto [u, v, t] = triples[k];
    Symbols left = *system.rule(u, v);
    left.push_back(t);
    Symbols right{u};
    auto const& tail = *system.rule(v, t);
    right.insert(right.end(), tail.begin(), tail.end());
    return static_cast<char>(system.normal_form(left, Strategy::leftmost) ==
                             system.normal_form(right, Strategy::leftmost));
  });
  for (std::size_t k = 0; k < triples.size(); ++k) {
    auto [u, v, t] = triples[k];
    report.record(results[k] != 0, json{{"u", format_word(system.generator(u).word())},
                                        {"v", format_word(system.generator(v).word())},
                                        {"t", format_word(system.generator(t).word())}});
  }
  return report;
}

CheckReport run_crystal_check(int n, std::size_t max_len) {
  auto report = begin_report("crystal", "n=" + std::to_string(n) + ", 0<=|w|<=" + std::to_string(max_len));
  auto const words = kernels::word_universe(n, 0, max_len);
  auto const results = kernels::map_parallel<std::string>(words.size(), [&](std::size_t k) {
    Word const& w = words[k];
    auto const wt = weight(w);
    for (int i = 1; i <= n; ++i) {
      auto const red = reduce_signature(w, i);
      if (!red.minus_positions.empty() && !red.plus_positions.empty() &&
          red.minus_positions.back() > red.plus_positions.front()) {
        return "reduced signature not of the form -^r +^s at i=" + std::to_string(i);
      }
      if (epsilon(w, i) != static_cast<int>(red.r()) || phi(w, i) != static_cast<int>(red.s())) {
        return "string lengths disagree with the signature at i=" + std::to_string(i);
      }
      if (auto down = lower(w, i)) {
        if (raise(*down, i) != w) return "e_i(f_i(w)) != w at i=" + std::to_string(i);
        auto expected = wt.d;
        if (i < n) {
          expected[static_cast<std::size_t>(i - 1)] -= 1;
          expected[static_cast<std::size_t>(i)] += 1;
        } else {
          expected[static_cast<std::size_t>(n - 1)] -= 2;
        }
        if (weight(*down).d != expected) return "weight shift wrong at i=" + std::to_string(i);
      }
      if (auto up = raise(w, i)) {
        if (lower(*up, i) != w) return "f_i(e_i(w)) != w at i=" + std::to_string(i);
      }
    }
    return std::string();
  });
  for (std::size_t k = 0; k < words.size(); ++k) {
    report.record(results[k].empty(),
                  json{{"word", format_word(words[k])}, {"problem", results[k]}});
  }
  return report;
}

CheckReport run_reading_check(int n, std::size_t max_columns) {
  auto report = begin_report("reading", "n=" + std::to_string(n) + ", tableaux with <= " +
                                    std::to_string(max_columns) + " columns");
  for (auto& columns : all_tableau_columns(n, max_columns)) {
    auto const t = SymplecticTableau::from_columns(n, columns);
    auto const p = tableau_of_word(reading(t));
    report.record(p == t, json{{"tableau", fmt(t)}, {"P_of_reading", fmt(p)}});
  }
  return report;
}

CheckReport run_completion_check(int m, std::size_t max_rules, std::size_t max_pairs,
                                 std::vector<int> const& family) {
  auto report = begin_report("completion", "type A Knuth relations over {1.." + std::to_string(m) +
                                       "}, <= " + std::to_string(max_rules) + " rules, <= " +
                                       std::to_string(max_pairs) + " critical pairs");
  auto const knuth = type_a_knuth_rules(m);
  auto const result =
      kb_complete(knuth, [](Symbols const& a, Symbols const& b) { return reverse_deglex_greater(a, b); },
                  max_rules, max_pairs);
  report.record(!result.closed, json{{"closed", result.closed}});
  for (int i : family) {
    Symbols lhs{2, 3};
    Symbols rhs{2, 3, 4};
    for (int k = 0; k < i; ++k) {
      lhs.push_back(2);
      rhs.push_back(2);
    }
    lhs.insert(lhs.end(), {1, 2, 4});
    rhs.insert(rhs.end(), {1, 2});
    bool const found = std::any_of(result.added.begin(), result.added.end(), [&](auto const& r) {
      return r.lhs == lhs && r.rhs == rhs;
    });
    report.record(found, json{{"missing_family_member", i}});
  }
  // Soundness: both sides of every added rule have the same insertion tableau;
  // short rules are also connected by undirected Knuth steps.
  constexpr std::size_t kSearchAuditLength = 10;
  std::uint64_t searched = 0;
  for (auto const& r : result.added) {
    bool sound =
        tableau_of_word(from_symbols(r.lhs, m)) == tableau_of_word(from_symbols(r.rhs, m));
    if (sound && r.lhs.size() <= kSearchAuditLength) {
      ++searched;
      sound = connected_within(r.lhs, r.rhs, knuth, r.lhs.size(), 1'000'000);
    }
    report.record(sound, json{{"unsound_rule_lhs", r.lhs}, {"rhs", r.rhs}});
  }
  report.details = {{"closed", result.closed},
                    {"rules_added", result.rules_added},
                    {"pairs_examined", result.pairs_examined},
                    {"active_rules", result.active.size()},
                    {"search_audited_rules", searched}};
  return report;
}

std::vector<CheckReport> run_all_checks(CheckOptions const& o) {
  std::vector<CheckReport> out;
  out.push_back(run_sheats_check(o.n));
  out.push_back(run_crystal_check(o.n, o.max_len));
  out.push_back(run_reading_check(o.n, 3));
  out.push_back(run_cross_section_check(o.n, o.max_len));
  out.push_back(run_congruence_check(o.n, std::min<std::size_t>(o.max_len, 5)));
  out.push_back(run_lemma_checks(o.n));
  out.push_back(run_confluence_check(o.n, o.max_len, o.seeds));
  out.push_back(run_orientation_check(o.n));
  out.push_back(run_tietze_check(o.n));
  out.push_back(run_local_confluence_check(o.n));
  return out;
}

}  // namespace plactic
