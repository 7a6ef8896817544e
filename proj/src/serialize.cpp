#include "plactic/serialize.hpp"

namespace plactic {

using nlohmann::json;

json word_to_json(Word const& w) {
  json out = json::array();
  for (Letter a : w) out.push_back(a.code());
  return out;
}

Word word_from_json(json const& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("word must be an array of integers");
  Word w(n);
  for (auto const& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("word entries must be integers");
    w.letters.push_back(parse_letter(std::to_string(x.get<int>()), n));
  }
  return w;
}

json tableau_to_json(SymplecticTableau const& t) {
  json columns = json::array();
  for (auto const& c : t.columns()) columns.push_back(word_to_json(c.word()));
  return {{"n", t.n()}, {"columns", columns}};
}

SymplecticTableau tableau_from_json(json const& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("columns")) {
    throw std::invalid_argument("tableau JSON needs \"n\" and \"columns\"");
  }
  int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Column> columns;
  for (auto const& c : j.at("columns")) columns.emplace_back(word_from_json(c, n));
  return SymplecticTableau::from_columns(n, std::move(columns));
}

json rule_table_to_json(AcolSystem const& system) {
  json generators = json::array();
  for (auto const& c : system.generators()) generators.push_back(word_to_json(c.word()));
  json rules = json::array();
  for (auto const& r : system.rules()) {
    json lhs = json::array();
    for (int id : r.lhs) lhs.push_back(word_to_json(system.generator(id).word()));
    json rhs = json::array();
    for (int id : r.rhs) rhs.push_back(word_to_json(system.generator(id).word()));
    rules.push_back({{"lhs", lhs}, {"rhs", rhs}, {"annihilating", r.rhs.empty()}});
  }
  return {{"n", system.n()}, {"generators", generators}, {"rules", rules}};
}

json completion_to_json(CompletionReport const& report, std::size_t sample) {
  json added = json::array();
  for (std::size_t i = 0; i < std::min(sample, report.added.size()); ++i) {
    added.push_back({{"lhs", report.added[i].lhs}, {"rhs", report.added[i].rhs}});
  }
  return {{"closed", report.closed},
          {"rules_added", report.rules_added},
          {"pairs_examined", report.pairs_examined},
          {"unorientable", report.unorientable},
          {"active_rules", report.active.size()},
          {"sample", added}};
}

json crystal_graph_to_json(CrystalGraph const& g) {
  json vertices = json::array();
  for (auto const& w : g.vertices) vertices.push_back(word_to_json(w));
  json edges = json::array();
  for (auto const& e : g.edges) edges.push_back({{"from", e.from}, {"i", e.i}, {"to", e.to}});
  return {{"vertices", vertices}, {"edges", edges}};
}

}  // namespace plactic
