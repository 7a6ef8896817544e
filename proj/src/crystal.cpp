#include "plactic/crystal.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace plactic {

namespace {

// +1 for '+', -1 for '-', 0 when the letter does not take part.
int sign_of(Letter a, int i, int n) {
  if (i == n) {
    if (a.value() != n) return 0;
    return a.barred() ? -1 : +1;
  }
  if (a.value() == i) return a.barred() ? -1 : +1;
  if (a.value() == i + 1) return a.barred() ? +1 : -1;
  return 0;
}

void check_index(Word const& w, int i) {
  if (i < 1 || i > w.n) {
    throw std::invalid_argument("crystal index " + std::to_string(i) + " outside 1.." +
                                std::to_string(w.n));
  }
}

}  // namespace

std::vector<int> WeightVector::fundamental_coordinates() const {
  std::vector<int> out(d.size());
  for (std::size_t i = 0; i + 1 < d.size(); ++i) out[i] = d[i] - d[i + 1];
  if (!d.empty()) out.back() = d.back();
  return out;
}

SignatureReduction reduce_signature(Word const& w, int i) {
  check_index(w, i);
  SignatureReduction red;
  red.i = i;
  // Bracket matching: each '-' cancels the nearest unmatched '+' to its left.
  std::vector<std::size_t> open_plus;
  for (std::size_t p = 0; p < w.size(); ++p) {
    int s = sign_of(w[p], i, w.n);
    if (s > 0) {
      open_plus.push_back(p);
    } else if (s < 0) {
      if (!open_plus.empty()) {
        open_plus.pop_back();
      } else {
        red.minus_positions.push_back(p);
      }
    }
  }
  red.plus_positions = std::move(open_plus);
  return red;
}

std::optional<Word> raise(Word const& w, int i) {
  auto red = reduce_signature(w, i);
  if (red.r() == 0) return std::nullopt;
  Word out = w;
  Letter& a = out.letters[red.minus_positions.back()];
  if (i == w.n) {
    a = Letter::unbarred(i);
  } else {
    a = a.barred() ? Letter::bar(i + 1) : Letter::unbarred(i);
  }
  return out;
}

std::optional<Word> lower(Word const& w, int i) {
  auto red = reduce_signature(w, i);
  if (red.s() == 0) return std::nullopt;
  Word out = w;
  Letter& a = out.letters[red.plus_positions.front()];
  if (i == w.n) {
    a = Letter::bar(i);
  } else {
    a = a.barred() ? Letter::bar(i) : Letter::unbarred(i + 1);
  }
  return out;
}

int epsilon(Word const& w, int i) {
  int k = 0;
  for (auto cur = raise(w, i); cur; cur = raise(*cur, i)) ++k;
  return k;
}

int phi(Word const& w, int i) {
  int k = 0;
  for (auto cur = lower(w, i); cur; cur = lower(*cur, i)) ++k;
  return k;
}

WeightVector weight(Word const& w) {
  WeightVector wt;
  wt.d.assign(static_cast<std::size_t>(w.n), 0);
  for (Letter a : w) wt.d[static_cast<std::size_t>(a.value() - 1)] += a.barred() ? -1 : 1;
  return wt;
}

bool is_highest_weight(Word const& w) {
  for (int i = 1; i <= w.n; ++i) {
    if (reduce_signature(w, i).r() > 0) return false;
  }
  return true;
}

CrystalLabel crystal_label(Word const& w) {
  CrystalLabel label;
  Word cur = w;
  for (;;) {
    bool moved = false;
    for (int i = 1; i <= w.n; ++i) {
      if (auto up = raise(cur, i)) {
        cur = std::move(*up);
        label.path.push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  label.highest_weight = weight(cur);
  return label;
}

bool crystal_equivalent(Word const& u, Word const& v) {
  require_same_alphabet(u, v);
  if (u.size() != v.size()) return false;
  Word cu = u;
  Word cv = v;
  for (;;) {
    int step = 0;
    for (int i = 1; i <= u.n && step == 0; ++i) {
      if (reduce_signature(cu, i).r() > 0) step = i;
    }
    if (step == 0) break;
    auto nu = raise(cu, step);
    auto nv = raise(cv, step);
    if (!nv) return false;
    cu = std::move(*nu);
    cv = std::move(*nv);
  }
  return is_highest_weight(cv) && weight(cu) == weight(cv);
}

CrystalGraph component(Word const& w, std::size_t max_vertices) {
  if (max_vertices == 0) throw std::invalid_argument("max_vertices must be positive");
  CrystalGraph g;
  std::map<Word, std::size_t> index;
  std::deque<std::size_t> queue;
  auto visit = [&](Word const& x) -> std::size_t {
    auto [it, inserted] = index.emplace(x, g.vertices.size());
    if (inserted) {
      if (g.vertices.size() >= max_vertices) {
        throw SizeLimitExceeded("crystal component exceeds " + std::to_string(max_vertices) +
                                " vertices");
      }
      g.vertices.push_back(x);
      queue.push_back(it->second);
    }
    return it->second;
  };
  visit(w);
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (int i = 1; i <= w.n; ++i) {
      if (auto down = lower(g.vertices[a], i)) {
        std::size_t b = visit(*down);
        g.edges.push_back({a, i, b});
      }
      if (auto up = raise(g.vertices[a], i)) visit(*up);
    }
  }
  return g;
}

std::string to_dot(CrystalGraph const& g) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << format_word(g.vertices[v]) << "\"];\n";
  }
  for (auto const& e : g.edges) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.i << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace plactic
