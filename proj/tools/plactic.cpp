// Command-line front end for the symplectic plactic monoid library.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plactic/checks.hpp"
#include "plactic/crystal.hpp"
#include "plactic/insertion.hpp"
#include "plactic/rewriting.hpp"
#include "plactic/serialize.hpp"

namespace {

using nlohmann::json;
using namespace plactic;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Globals {
  int n = 2;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t max_len = 6;
  std::size_t max_rules = 200;
  std::size_t max_pairs = 10'000;
  std::string strategy = "leftmost";
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_format(Globals const& g, std::initializer_list<char const*> allowed) {
  for (auto const* f : allowed) {
    if (g.format == f) return;
  }
  throw UsageError("format '" + g.format + "' is not supported by this command");
}

std::string bracketed(Word const& w) { return "[" + format_word(w) + "]"; }

json load_json_argument(std::string const& arg) {
  std::ifstream in(arg);
  try {
    if (in) return json::parse(in);
    return json::parse(arg);
  } catch (json::parse_error const& e) {
    throw UsageError(std::string("cannot parse tableau JSON: ") + e.what());
  }
}

void print_tableau(Globals const& g, SymplecticTableau const& t) {
  require_format(g, {"text", "json"});
  if (g.format == "json") {
    std::cout << tableau_to_json(t).dump() << "\n";
  } else {
    std::cout << render_grid(t);
  }
}

int cmd_p(Globals const& g, std::string const& text) {
  print_tableau(g, tableau_of_word(parse_word(text, g.n)));
  return 0;
}

int cmd_insert(Globals const& g, std::string const& tableau_arg, std::string const& letter) {
  auto const t = tableau_from_json(load_json_argument(tableau_arg));
  print_tableau(g, insert_into_tableau(t, parse_letter(letter, t.n())));
  return 0;
}

int cmd_nf(Globals const& g, std::string const& text) {
  require_format(g, {"text", "json"});
  AcolSystem const system(g.n);
  auto const w = parse_word(text, g.n);
  NormalFormStats stats;
  auto const nf = system.normal_form(system.embed(w), parse_strategy(g.strategy), g.seed, &stats);
  if (g.format == "json") {
    json gens = json::array();
    for (int id : nf) gens.push_back(word_to_json(system.generator(id).word()));
    std::cout << json{{"word", word_to_json(w)},
                      {"normal_form", gens},
                      {"tableau", tableau_to_json(system.to_tableau(nf))},
                      {"steps", stats.steps}}
                     .dump()
              << "\n";
  } else {
    for (std::size_t i = 0; i < nf.size(); ++i) {
      std::cout << (i ? " " : "") << bracketed(system.generator(nf[i]).word());
    }
    std::cout << "\nsteps: " << stats.steps << "\n";
  }
  return 0;
}

int cmd_rules(Globals const& g) {
  require_format(g, {"text", "json"});
  AcolSystem const system(g.n);
  if (g.format == "json") {
    std::cout << rule_table_to_json(system).dump() << "\n";
    return 0;
  }
  std::size_t count = 0;
  std::size_t annihilating = 0;
  for (auto const& r : system.rules()) {
    ++count;
    std::cout << bracketed(system.generator(r.lhs[0]).word()) << " "
              << bracketed(system.generator(r.lhs[1]).word()) << " ->";
    for (int id : r.rhs) std::cout << " " << bracketed(system.generator(id).word());
    if (r.rhs.empty()) {
      ++annihilating;
      std::cout << " (empty)";
    }
    std::cout << "\n";
  }
  std::cout << "generators: " << system.generator_count() << ", rules: " << count
            << ", annihilating: " << annihilating << "\n";
  return 0;
}

int cmd_columns(Globals const& g) {
  require_format(g, {"text", "json"});
  auto const columns = enumerate_admissible(g.n);
  std::map<std::size_t, std::size_t> by_height;
  json entries = json::array();
  for (auto const& c : columns) {
    ++by_height[c.height()];
    auto const s = split_or_throw(c);
    entries.push_back({{"column", word_to_json(c.word())},
                       {"left", word_to_json(s.left.word())},
                       {"right", word_to_json(s.right.word())}});
  }
  if (g.format == "json") {
    json counts = json::object();
    for (auto [h, k] : by_height) counts[std::to_string(h)] = k;
    std::cout << json{{"n", g.n}, {"total", columns.size()}, {"by_height", counts},
                      {"columns", entries}}
                     .dump()
              << "\n";
    return 0;
  }
  for (auto const& c : columns) {
    auto const s = split_or_throw(c);
    std::cout << bracketed(c.word()) << "  l=" << bracketed(s.left.word())
              << "  r=" << bracketed(s.right.word()) << "\n";
  }
  for (auto [h, k] : by_height) std::cout << "height " << h << ": " << k << "\n";
  std::cout << "total: " << columns.size() << "\n";
  return 0;
}

int cmd_crystal(Globals const& g, std::string const& text, std::size_t max_vertices) {
  auto const w = parse_word(text, g.n);
  if (g.format == "dot") {
    std::cout << to_dot(component(w, max_vertices));
    return 0;
  }
  auto const label = crystal_label(w);
  if (g.format == "json") {
    json eps = json::array();
    json phis = json::array();
    for (int i = 1; i <= g.n; ++i) {
      eps.push_back(epsilon(w, i));
      phis.push_back(phi(w, i));
    }
    std::cout << json{{"word", word_to_json(w)},
                      {"weight", weight(w).d},
                      {"epsilon", eps},
                      {"phi", phis},
                      {"highest_weight", is_highest_weight(w)},
                      {"raising_path", label.path},
                      {"highest_weight_weight", label.highest_weight.d},
                      {"component", crystal_graph_to_json(component(w, max_vertices))}}
                     .dump()
              << "\n";
    return 0;
  }
  require_format(g, {"text"});
  std::cout << "word: " << format_word(w) << "\nweight:";
  for (int d : weight(w).d) std::cout << " " << d;
  std::cout << "\n";
  for (int i = 1; i <= g.n; ++i) {
    std::cout << "i=" << i << ": epsilon=" << epsilon(w, i) << " phi=" << phi(w, i);
    if (auto e = raise(w, i)) std::cout << " e=" << bracketed(*e);
    if (auto f = lower(w, i)) std::cout << " f=" << bracketed(*f);
    std::cout << "\n";
  }
  std::cout << "raising path:";
  for (int i : label.path) std::cout << " " << i;
  std::cout << "\ncomponent size: " << component(w, max_vertices).vertices.size() << "\n";
  return 0;
}

int cmd_check(Globals const& g, std::string const& suite, std::size_t seeds) {
  require_format(g, {"text", "json"});
  CheckOptions options;
  options.n = g.n;
  options.max_len = g.max_len;
  options.seeds.clear();
  for (std::size_t k = 0; k < seeds; ++k) options.seeds.push_back(g.seed + k);

  std::vector<CheckReport> reports;
  if (suite == "all") {
    reports = run_all_checks(options);
  } else if (suite == "cross-section") {
    reports.push_back(run_cross_section_check(g.n, g.max_len));
  } else if (suite == "congruence") {
    reports.push_back(run_congruence_check(g.n, g.max_len));
  } else if (suite == "lemmas") {
    reports.push_back(run_lemma_checks(g.n));
  } else if (suite == "convergence") {
    reports.push_back(run_confluence_check(g.n, g.max_len, options.seeds));
  } else if (suite == "sheats") {
    reports.push_back(run_sheats_check(g.n));
  } else if (suite == "orientation") {
    reports.push_back(run_orientation_check(g.n));
  } else if (suite == "tietze") {
    reports.push_back(run_tietze_check(g.n));
  } else if (suite == "local-confluence") {
    reports.push_back(run_local_confluence_check(g.n));
  } else if (suite == "crystal") {
    reports.push_back(run_crystal_check(g.n, g.max_len));
  } else if (suite == "reading") {
    reports.push_back(run_reading_check(g.n, 3));
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }

  bool ok = true;
  for (auto const& r : reports) ok = ok && r.ok();
  if (g.format == "json") {
    std::cout << json{{"ok", ok}, {"reports", reports}}.dump(2) << "\n";
  } else {
    for (auto const& r : reports) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.suite << " (" << r.universe << "): "
                << r.passes << "/" << r.cases << "\n";
      if (r.witness) std::cout << "  witness: " << r.witness->dump() << "\n";
    }
  }
  return ok ? 0 : kExitCheckFailed;
}

int cmd_complete(Globals const& g) {
  require_format(g, {"text", "json"});
  auto const report = kb_complete(
      type_a_knuth_rules(g.n),
      [](Symbols const& a, Symbols const& b) { return reverse_deglex_greater(a, b); },
      g.max_rules, g.max_pairs);
  if (g.format == "json") {
    std::cout << completion_to_json(report, report.added.size()).dump() << "\n";
    return 0;
  }
  std::cout << (report.closed ? "closed" : "open") << " after " << report.pairs_examined
            << " critical pairs, " << report.rules_added << " rules added, "
            << report.active.size() << " active\n";
  auto symbols = [](Symbols const& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    return out.str();
  };
  for (auto const& r : report.added) std::cout << symbols(r.lhs) << " -> " << symbols(r.rhs) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type C plactic monoid: insertion, crystals and column rewriting"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--n", g.n, "Rank of the alphabet C_n")->check(CLI::Range(1, 63));
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--seed", g.seed, "Seed for randomized strategies");
  app.add_option("--max-len", g.max_len, "Longest word in check universes");
  app.add_option("--max-rules", g.max_rules, "Completion rule budget");
  app.add_option("--max-pairs", g.max_pairs, "Completion critical-pair budget");
  app.add_option("--strategy", g.strategy, "Normal form strategy")
      ->check(CLI::IsMember({"leftmost", "rightmost", "random", "seeded-random"}));

  std::string word;
  std::string tableau;
  std::string letter;
  std::string suite = "all";
  std::size_t seeds = 5;
  std::size_t max_vertices = 100'000;
  bool type_a = false;

  auto* p = app.add_subcommand("p", "Insertion tableau P(w)");
  p->add_option("word", word, "Word, e.g. \"1 2 -3\"")->required();
  auto* insert = app.add_subcommand("insert", "Insert one letter into a tableau");
  insert->add_option("tableau", tableau, "Tableau JSON or a path to it")->required();
  insert->add_option("letter", letter, "Letter to insert")->required();
  auto* nf = app.add_subcommand("nf", "Column normal form of a word");
  nf->add_option("word", word)->required();
  auto* rules = app.add_subcommand("rules", "Column rewriting rule table");
  auto* columns = app.add_subcommand("columns", "Admissible columns with their splits");
  auto* crystal = app.add_subcommand("crystal", "Crystal data and component of a word");
  crystal->add_option("word", word)->required();
  crystal->add_option("--max-vertices", max_vertices, "Component size limit");
  auto* check = app.add_subcommand("check", "Run verification suites");
  check->add_option("--suite", suite, "Suite name or 'all'");
  check->add_option("--seeds", seeds, "Number of random seeds starting at --seed");
  auto* complete = app.add_subcommand("complete", "Bounded completion of type A Knuth relations");
  complete->add_flag("--type-a", type_a, "Complete the type A Knuth relations over 1..n");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*p) return cmd_p(g, word);
    if (*insert) return cmd_insert(g, tableau, letter);
    if (*nf) return cmd_nf(g, word);
    if (*rules) return cmd_rules(g);
    if (*columns) return cmd_columns(g);
    if (*crystal) return cmd_crystal(g, word, max_vertices);
    if (*check) return cmd_check(g, suite, seeds);
    if (*complete) {
      if (!type_a) throw UsageError("complete needs --type-a");
      return cmd_complete(g);
    }
  } catch (BudgetExceeded const& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (SizeLimitExceeded const& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
