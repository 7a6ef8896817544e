#include "plactic/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "plactic/insertion.hpp"

namespace plactic {

// ---------------------------------------------------------------------------
// Generic engine

bool reverse_deglex_greater(Symbols const& a, Symbols const& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<std::size_t> find_factor(Symbols const& s, Symbols const& pattern,
                                       std::size_t from) {
  if (pattern.size() > s.size()) return std::nullopt;
  for (std::size_t pos = from; pos + pattern.size() <= s.size(); ++pos) {
    if (std::equal(pattern.begin(), pattern.end(), s.begin() + static_cast<std::ptrdiff_t>(pos))) {
      return pos;
    }
  }
  return std::nullopt;
}

Symbols replace_factor(Symbols const& s, std::size_t pos, std::size_t length,
                       Symbols const& replacement) {
  Symbols out;
  out.reserve(s.size() - length + replacement.size());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(pos + length), s.end());
  return out;
}

namespace {

// Prefix tree over left-hand sides.
class RuleIndex {
 public:
  explicit RuleIndex(std::vector<RewriteRule const*> const& rules) : nodes_(1) {
    for (std::size_t k = 0; k < rules.size(); ++k) {
      auto const& lhs = rules[k]->lhs;
      if (lhs.empty()) throw std::invalid_argument("rule with empty left-hand side");
      std::size_t node = 0;
      for (int x : lhs) {
        auto [it, inserted] = nodes_[node].next.try_emplace(x, nodes_.size());
        if (inserted) nodes_.emplace_back();
        node = it->second;
      }
      if (!nodes_[node].rule) nodes_[node].rule = rules[k];
      nodes_[node].order = std::min(nodes_[node].order, k);
      longest_ = std::max(longest_, lhs.size());
    }
  }

  std::size_t longest() const { return longest_; }

  // Leftmost redex at or after `from`: smallest position, first rule in table order.
  std::optional<std::pair<std::size_t, RewriteRule const*>> leftmost_redex(Symbols const& s,
                                                                           std::size_t from) const {
    for (std::size_t pos = from; pos < s.size(); ++pos) {
      RewriteRule const* best = nullptr;
      std::size_t best_order = 0;
      std::size_t node = 0;
      for (std::size_t k = pos; k < s.size(); ++k) {
        auto it = nodes_[node].next.find(s[k]);
        if (it == nodes_[node].next.end()) break;
        node = it->second;
        if (nodes_[node].rule && (!best || nodes_[node].order < best_order)) {
          best = nodes_[node].rule;
          best_order = nodes_[node].order;
        }
      }
      if (best) return std::pair{pos, best};
    }
    return std::nullopt;
  }

 private:
  struct Node {
    std::map<int, std::size_t> next;
    RewriteRule const* rule = nullptr;
    std::size_t order = std::numeric_limits<std::size_t>::max();
  };
  std::vector<Node> nodes_;
  std::size_t longest_ = 0;
};

Symbols normalize_with(Symbols s, std::vector<RewriteRule const*> const& rules,
                       std::size_t max_steps) {
  RuleIndex const index(rules);
  std::size_t from = 0;
  for (std::size_t step = 0;; ++step) {
    auto redex = index.leftmost_redex(s, from);
    if (!redex) return s;
    if (step == max_steps) throw std::runtime_error("rewriting step budget exhausted");
    s = replace_factor(s, redex->first, redex->second->lhs.size(), redex->second->rhs);
    // No redex ends before the rewritten factor, so none starts earlier than this.
    from = redex->first + 1 > index.longest() ? redex->first + 1 - index.longest() : 0;
  }
}

}  // namespace

Symbols normalize(Symbols s, std::vector<RewriteRule> const& rules, std::size_t max_steps) {
  std::vector<RewriteRule const*> ptrs;
  for (auto const& r : rules) ptrs.push_back(&r);
  return normalize_with(std::move(s), ptrs, max_steps);
}

std::vector<Symbols> undirected_neighbours(Symbols const& s, std::vector<RewriteRule> const& rules) {
  std::vector<Symbols> out;
  auto apply_all = [&](Symbols const& from, Symbols const& to) {
    for (std::size_t pos = 0; pos + from.size() <= s.size(); ++pos) {
      if (std::equal(from.begin(), from.end(), s.begin() + static_cast<std::ptrdiff_t>(pos))) {
        out.push_back(replace_factor(s, pos, from.size(), to));
      }
    }
  };
  for (auto const& r : rules) {
    apply_all(r.lhs, r.rhs);
    apply_all(r.rhs, r.lhs);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Letter-level presentation

Symbols to_symbols(Word const& w) {
  Symbols s;
  s.reserve(w.size());
  for (Letter a : w) s.push_back(a.rank(w.n));
  return s;
}

Word from_symbols(Symbols const& s, int n) {
  Word w(n);
  w.letters.reserve(s.size());
  for (int r : s) w.letters.push_back(Letter::from_rank(r, n));
  return w;
}

bool reverse_deglex_greater(Word const& a, Word const& b) {
  require_same_alphabet(a, b);
  return reverse_deglex_greater(to_symbols(a), to_symbols(b));
}

std::vector<Word> minimal_nonadmissible_words(int n) {
  std::vector<Word> out;
  for (auto const& c : enumerate_columns(n)) {
    if (classify_column_word(c.word()) == ColumnWordClass::minimal_nonadmissible_column) {
      out.push_back(c.word());
    }
  }
  return out;
}

std::vector<RewriteRule> sp_rules(int n) {
  std::vector<Letter> alphabet;
  for (int r = 1; r <= 2 * n; ++r) alphabet.push_back(Letter::from_rank(r, n));

  std::vector<RewriteRule> rules;
  auto add = [&](RelationFamily f, std::vector<Letter> lhs, std::vector<Letter> rhs) {
    rules.push_back({to_symbols(Word(n, std::move(lhs))), to_symbols(Word(n, std::move(rhs))), f});
  };
  for (Letter x : alphabet) {
    for (Letter y : alphabet) {
      for (Letter z : alphabet) {
        if (z == x.conjugate()) continue;
        if (x < y && y <= z) add(RelationFamily::kappa, {x, z, y}, {z, x, y});
        if (x <= y && y < z) add(RelationFamily::kappa_prime, {y, x, z}, {y, z, x});
      }
    }
  }
  for (int v = 2; v <= n; ++v) {
    Letter x = Letter::unbarred(v);
    Letter lo = Letter::unbarred(v - 1);
    for (Letter y : alphabet) {
      if (!(x <= y && y <= x.conjugate())) continue;
      add(RelationFamily::xi, {y, x, x.conjugate()}, {y, lo.conjugate(), lo});
      add(RelationFamily::xi_prime, {x, x.conjugate(), y}, {lo.conjugate(), lo, y});
    }
  }
  for (auto const& w : minimal_nonadmissible_words(n)) {
    rules.push_back({to_symbols(w), to_symbols(contract(w)), RelationFamily::zeta});
  }
  return rules;
}

bool connected_within(Symbols const& u, Symbols const& v, std::vector<RewriteRule> const& rules,
                      std::size_t length_cap, std::size_t max_closure) {
  std::set<Symbols> seen{u};
  std::deque<Symbols> queue{u};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    if (cur == v) return true;
    for (auto& next : undirected_neighbours(cur, rules)) {
      if (next.size() > length_cap) continue;
      if (seen.insert(next).second) {
        if (seen.size() > max_closure) {
          throw ClosureLimitExceeded("congruence closure exceeds " + std::to_string(max_closure) +
                                     " words");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

bool congruence_oracle(Word const& u, Word const& v, std::size_t length_cap,
                       std::size_t max_closure) {
  require_same_alphabet(u, v);
  if (length_cap < std::max(u.size(), v.size())) {
    throw std::invalid_argument("length cap below the input lengths");
  }
  return connected_within(to_symbols(u), to_symbols(v), sp_rules(u.n), length_cap, max_closure);
}

std::uint32_t CongruencePartition::class_id(Word const& w) const {
  if (w.n != n || w.size() > length_cap) throw std::out_of_range("word outside the partition");
  std::uint64_t index = 0;
  for (Letter a : w) index = index * static_cast<std::uint64_t>(2 * n) + static_cast<std::uint64_t>(a.rank(n) - 1);
  return class_of[offsets[w.size()] + index];
}

CongruencePartition congruence_partition(int n, std::size_t length_cap) {
  CongruencePartition part{n, length_cap, {}, {}};
  std::uint64_t total = 0;
  for (std::size_t len = 0; len <= length_cap; ++len) {
    part.offsets.push_back(total);
    total += count_words(len, n);
  }
  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto id_of = [&](Symbols const& s) {
    std::uint64_t index = 0;
    for (int r : s) index = index * static_cast<std::uint64_t>(2 * n) + static_cast<std::uint64_t>(r - 1);
    return part.offsets[s.size()] + index;
  };
  auto const rules = sp_rules(n);
  // Every rule shortens or preserves length, so forward steps from all words
  // within the cap reach every undirected edge inside the cap.
  for (std::size_t len = 0; len <= length_cap; ++len) {
    for (std::uint64_t i = 0; i < count_words(len, n); ++i) {
      auto s = to_symbols(word_from_index(i, len, n));
      auto const from = part.offsets[len] + i;
      for (auto const& r : rules) {
        for (std::size_t pos = 0; pos + r.lhs.size() <= s.size(); ++pos) {
          if (std::equal(r.lhs.begin(), r.lhs.end(), s.begin() + static_cast<std::ptrdiff_t>(pos))) {
            auto a = find(from);
            auto b = find(id_of(replace_factor(s, pos, r.lhs.size(), r.rhs)));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
        }
      }
    }
  }
  part.class_of.resize(total);
  std::map<std::uint64_t, std::uint32_t> ids;
  for (std::uint64_t i = 0; i < total; ++i) {
    auto root = find(i);
    auto [it, inserted] = ids.emplace(root, static_cast<std::uint32_t>(ids.size()));
    part.class_of[i] = it->second;
  }
  return part;
}

// ---------------------------------------------------------------------------
// Knuth-Bendix completion

namespace {

struct PendingPair {
  std::size_t weight;
  std::size_t serial;
  Symbols a;
  Symbols b;

  bool operator>(PendingPair const& other) const {
    return std::tie(weight, serial) > std::tie(other.weight, other.serial);
  }
};

class Completion {
 public:
  Completion(TermOrder const& order, std::size_t max_rules, std::size_t max_pairs)
      : order_(order), max_rules_(max_rules), max_pairs_(max_pairs) {}

  CompletionReport run(std::vector<RewriteRule> initial) {
    for (auto& r : initial) {
      if (!order_(r.lhs, r.rhs)) throw std::invalid_argument("input rule is not oriented");
      rules_.push_back(std::move(r));
      alive_.push_back(true);
    }
    for (std::size_t j = 0; j < rules_.size(); ++j) queue_pairs_with(j);

    while (!pending_.empty()) {
      if (report_.pairs_examined >= max_pairs_ || report_.rules_added >= max_rules_) {
        finish(false);
        return report_;
      }
      auto pair = pending_.top();
      pending_.pop();
      ++report_.pairs_examined;
      auto a = reduce(pair.a);
      auto b = reduce(pair.b);
      if (a == b) continue;
      if (order_(b, a)) std::swap(a, b);
      if (!order_(a, b)) {
        ++report_.unorientable;
        report_.unorientable_pairs.emplace_back(a, b);
        continue;
      }
      add_rule({std::move(a), std::move(b), RelationFamily::completion});
    }
    finish(true);
    return report_;
  }

 private:
  Symbols reduce(Symbols s) const {
    std::vector<RewriteRule const*> live;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (alive_[i]) live.push_back(&rules_[i]);
    }
    return normalize_with(std::move(s), live, 1'000'000);
  }

  void push(Symbols a, Symbols b) {
    std::size_t weight = std::max(a.size(), b.size());
    pending_.push({weight, serial_++, std::move(a), std::move(b)});
  }

  // Overlaps of rule i's lhs followed by rule j's lhs, and inclusions of j in i.
  void overlaps(std::size_t i, std::size_t j) {
    auto const& l1 = rules_[i].lhs;
    auto const& l2 = rules_[j].lhs;
    for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
      if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
      Symbols left = rules_[i].rhs;
      left.insert(left.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
      Symbols right(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
      right.insert(right.end(), rules_[j].rhs.begin(), rules_[j].rhs.end());
      push(std::move(left), std::move(right));
    }
    if (i != j && l2.size() <= l1.size()) {
      for (auto pos = find_factor(l1, l2); pos; pos = find_factor(l1, l2, *pos + 1)) {
        push(rules_[i].rhs, replace_factor(l1, *pos, l2.size(), rules_[j].rhs));
      }
    }
  }

  void queue_pairs_with(std::size_t j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if (!alive_[i]) continue;
      overlaps(i, j);
      if (i != j) overlaps(j, i);
    }
  }

  void add_rule(RewriteRule rule) {
    rules_.push_back(rule);
    alive_.push_back(true);
    std::size_t const j = rules_.size() - 1;
    ++report_.rules_added;
    report_.added.push_back(rule);
    // Inter-reduction: rules whose lhs contains the new lhs go back to the queue.
    for (std::size_t i = 0; i < j; ++i) {
      if (!alive_[i]) continue;
      if (find_factor(rules_[i].lhs, rule.lhs)) {
        alive_[i] = false;
        push(rules_[i].lhs, rules_[i].rhs);
      } else if (find_factor(rules_[i].rhs, rule.lhs)) {
        rules_[i].rhs = reduce(rules_[i].rhs);
      }
    }
    queue_pairs_with(j);
  }

  void finish(bool closed) {
    report_.closed = closed;
    report_.active.clear();
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (alive_[i]) report_.active.push_back(rules_[i]);
    }
  }

  TermOrder const& order_;
  std::size_t max_rules_;
  std::size_t max_pairs_;
  std::vector<RewriteRule> rules_;
  std::vector<bool> alive_;
  std::priority_queue<PendingPair, std::vector<PendingPair>, std::greater<>> pending_;
  std::size_t serial_ = 0;
  CompletionReport report_;
};

}  // namespace

CompletionReport kb_complete(std::vector<RewriteRule> rules, TermOrder const& order,
                             std::size_t max_rules, std::size_t max_pairs) {
  return Completion(order, max_rules, max_pairs).run(std::move(rules));
}

std::vector<RewriteRule> type_a_knuth_rules(int m) {
  std::vector<RewriteRule> out;
  // Unbarred letters of C_m have ranks 1..m, equal to their values.
  for (auto& r : sp_rules(m)) {
    if (r.family != RelationFamily::kappa && r.family != RelationFamily::kappa_prime) continue;
    auto unbarred = [m](Symbols const& s) {
      return std::all_of(s.begin(), s.end(), [m](int x) { return x <= m; });
    };
    if (unbarred(r.lhs)) out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Admissible column presentation

bool generator_precedes(Word const& u, Word const& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u.letters < v.letters;
}

Strategy parse_strategy(std::string const& name) {
  if (name == "leftmost") return Strategy::leftmost;
  if (name == "rightmost") return Strategy::rightmost;
  if (name == "random" || name == "seeded-random") return Strategy::random;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

std::optional<AcolRule> acol_rule(Word const& u, Word const& v) {
  require_same_alphabet(u, v);
  Column cu(u);
  Column cv(v);
  if (column_preceq(cv, cu)) return std::nullopt;
  auto p = tableau_of_word(concat(u, v));
  if (p.width() > 2) {
    throw InsertionInvariantViolated("P(" + format_word(concat(u, v)) + ") has " +
                                     std::to_string(p.width()) + " columns");
  }
  AcolRule rule{u, v, {}};
  for (auto it = p.columns().rbegin(); it != p.columns().rend(); ++it) rule.rhs.push_back(it->word());
  return rule;
}

AcolSystem::AcolSystem(int n) : n_(n), generators_(enumerate_admissible(n)) {
  auto const g = generators_.size();
  table_.resize(g * g);
  for (std::size_t u = 0; u < g; ++u) {
    for (std::size_t v = 0; v < g; ++v) {
      auto rule = acol_rule(generators_[u].word(), generators_[v].word());
      if (!rule) continue;
      Symbols rhs;
      for (auto const& w : rule->rhs) rhs.push_back(id_of(Column(w)));
      table_[u * g + v] = std::move(rhs);
    }
  }
}

int AcolSystem::id_of(Column const& c) const {
  auto less = [](Column const& a, Column const& b) { return generator_precedes(a.word(), b.word()); };
  auto it = std::lower_bound(generators_.begin(), generators_.end(), c, less);
  if (it == generators_.end() || !(*it == c)) {
    throw std::invalid_argument("not an admissible column generator: " + format_word(c.word()));
  }
  return static_cast<int>(it - generators_.begin());
}

std::vector<RewriteRule> AcolSystem::rules() const {
  std::vector<RewriteRule> out;
  auto const g = static_cast<int>(generators_.size());
  for (int u = 0; u < g; ++u) {
    for (int v = 0; v < g; ++v) {
      if (auto const& rhs = rule(u, v)) out.push_back({{u, v}, *rhs, RelationFamily::alpha});
    }
  }
  return out;
}

bool AcolSystem::sequence_precedes(Symbols const& h, Symbols const& g) {
  if (h.size() != g.size()) return h.size() < g.size();
  return std::lexicographical_compare(h.begin(), h.end(), g.begin(), g.end());
}

Symbols AcolSystem::embed(Word const& w) const {
  if (w.n != n_) throw AlphabetMismatch("word alphabet differs from the presentation's");
  Symbols h;
  h.reserve(w.size());
  for (Letter a : w) h.push_back(id_of(Column(Word(n_, {a}))));
  return h;
}

Word AcolSystem::reading(Symbols const& h) const {
  Word w(n_);
  for (int id : h) {
    auto const& c = generator(id).word();
    w.letters.insert(w.letters.end(), c.begin(), c.end());
  }
  return w;
}

Symbols AcolSystem::normal_form(Symbols h, Strategy strategy, std::uint64_t seed,
                                NormalFormStats* stats, std::size_t max_steps) const {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> redexes;
  for (std::size_t step = 0;; ++step) {
    redexes.clear();
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      if (rule(h[i], h[i + 1])) redexes.push_back(i);
    }
    if (redexes.empty()) return h;
    if (step == max_steps) throw std::runtime_error("normal form step budget exhausted");
    std::size_t pos = 0;
    switch (strategy) {
      case Strategy::leftmost: pos = redexes.front(); break;
      case Strategy::rightmost: pos = redexes.back(); break;
      case Strategy::random:
        pos = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
        break;
    }
    auto next = replace_factor(h, pos, 2, *rule(h[pos], h[pos + 1]));
    if (stats) {
      ++stats->steps;
      if (!sequence_precedes(next, h)) ++stats->order_violations;
    }
    h = std::move(next);
  }
}

SymplecticTableau AcolSystem::to_tableau(Symbols const& normal) const {
  std::vector<Column> columns;
  for (auto it = normal.rbegin(); it != normal.rend(); ++it) columns.push_back(generator(*it));
  return SymplecticTableau::from_columns(n_, std::move(columns));
}

}  // namespace plactic
