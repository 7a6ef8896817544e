#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "plactic/alphabet.hpp"

namespace plactic {

/// Families of the defining relations of the symplectic plactic congruence.
/// The Knuth-type relations (R1) are kappa/kappa_prime, the barred-pair
/// slides (R2) are xi/xi_prime, and the contractions (R3) are zeta.
enum class RelationFamily { kappa, kappa_prime, xi, xi_prime, zeta, alpha, gamma, completion };

std::string_view family_name(RelationFamily f);

using Triple = std::array<Letter, 3>;

/// One way to rewrite a length-3 window by an instance of R1 or R2, read in
/// either direction.
struct WindowMove {
  RelationFamily family;
  bool oriented;  // true when the move goes from the greater side to the smaller one
  Triple result;
};

/// Every R1/R2 instance having `window` as one of its sides.
std::vector<WindowMove> window_moves(Triple const& window, int n);

}  // namespace plactic
