#include "plactic/relations.hpp"

namespace plactic {

std::string_view family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::kappa: return "kappa";
    case RelationFamily::kappa_prime: return "kappa'";
    case RelationFamily::xi: return "xi";
    case RelationFamily::xi_prime: return "xi'";
    case RelationFamily::zeta: return "zeta";
    case RelationFamily::alpha: return "alpha";
    case RelationFamily::gamma: return "gamma";
    case RelationFamily::completion: return "completion";
  }
  return "?";
}

namespace {

// x <= y < z, z != x̄
bool knuth_left(Letter x, Letter y, Letter z) { return x <= y && y < z && z != x.conjugate(); }
// x < y <= z, z != x̄
bool knuth_right(Letter x, Letter y, Letter z) { return x < y && y <= z && z != x.conjugate(); }
// 1 < x <= n unbarred, x <= y <= x̄
bool slide_ok(Letter x, Letter y, int n) {
  return !x.barred() && x.value() > 1 && x.value() <= n && x <= y && y <= x.conjugate();
}

}  // namespace

std::vector<WindowMove> window_moves(Triple const& window, int n) {
  auto const [p, q, r] = window;
  std::vector<WindowMove> moves;
  using F = RelationFamily;

  // kappa': yxz -> yzx   (x <= y < z, z != x̄)
  if (knuth_left(r, p, q)) moves.push_back({F::kappa_prime, false, {p, r, q}});  // yzx -> yxz
  if (knuth_left(q, p, r)) moves.push_back({F::kappa_prime, true, {p, r, q}});   // yxz -> yzx

  // kappa: xzy -> zxy   (x < y <= z, z != x̄)
  if (knuth_right(p, r, q)) moves.push_back({F::kappa, true, {q, p, r}});   // xzy -> zxy
  if (knuth_right(q, r, p)) moves.push_back({F::kappa, false, {q, p, r}});  // zxy -> xzy

  // xi: y x x̄ -> y (x-1)̄ (x-1)
  if (!q.barred() && r == q.conjugate() && slide_ok(q, p, n)) {
    Letter lo = Letter::unbarred(q.value() - 1);
    moves.push_back({F::xi, true, {p, lo.conjugate(), lo}});
  }
  if (q.barred() && !r.barred() && q.value() == r.value() && r.value() < n) {
    Letter x = Letter::unbarred(r.value() + 1);
    if (slide_ok(x, p, n)) moves.push_back({F::xi, false, {p, x, x.conjugate()}});
  }

  // xi': x x̄ y -> (x-1)̄ (x-1) y
  if (!p.barred() && q == p.conjugate() && slide_ok(p, r, n)) {
    Letter lo = Letter::unbarred(p.value() - 1);
    moves.push_back({F::xi_prime, true, {lo.conjugate(), lo, r}});
  }
  if (p.barred() && !q.barred() && p.value() == q.value() && q.value() < n) {
    Letter x = Letter::unbarred(q.value() + 1);
    if (slide_ok(x, r, n)) moves.push_back({F::xi_prime, false, {x, x.conjugate(), r}});
  }
  return moves;
}

}  // namespace plactic
