#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plactic/alphabet.hpp"

namespace plactic {

/// Outcome of the signature rule for one index i.
///
/// Letters i and (i+1)̄ read as '+', letters i+1 and ī as '-' (for i = n:
/// n is '+', n̄ is '-'). Adjacent "+-" pairs are cancelled until the reduced
/// signature has the form -^r +^s. Positions index into the original word.
struct SignatureReduction {
  int i = 1;
  std::vector<std::size_t> minus_positions;
  std::vector<std::size_t> plus_positions;

  std::size_t r() const { return minus_positions.size(); }
  std::size_t s() const { return plus_positions.size(); }
};

/// d_i = #letters i - #letters ī, for i = 1..n.
struct WeightVector {
  std::vector<int> d;

  bool operator==(WeightVector const&) const = default;
  auto operator<=>(WeightVector const&) const = default;

  /// Coefficients on the fundamental weights: d_i - d_{i+1} for i < n, d_n last.
  std::vector<int> fundamental_coordinates() const;
};

SignatureReduction reduce_signature(Word const& w, int i);

/// ẽ_i; nullopt when the word is killed.
std::optional<Word> raise(Word const& w, int i);
/// f̃_i; acts on the leftmost unmatched '+'.
std::optional<Word> lower(Word const& w, int i);

int epsilon(Word const& w, int i);
int phi(Word const& w, int i);

WeightVector weight(Word const& w);
bool is_highest_weight(Word const& w);

/// Greedy raising path: apply ẽ_i for the smallest applicable i until the
/// word is highest weight. Together with the endpoint's weight this is a
/// complete invariant for position in isomorphic components.
struct CrystalLabel {
  std::vector<int> path;
  WeightVector highest_weight;

  bool operator==(CrystalLabel const&) const = default;
  auto operator<=>(CrystalLabel const&) const = default;
};

CrystalLabel crystal_label(Word const& w);
bool crystal_equivalent(Word const& u, Word const& v);

struct CrystalEdge {
  std::size_t from;
  int i;
  std::size_t to;
};

struct CrystalGraph {
  std::vector<Word> vertices;  // BFS order from the seed
  std::vector<CrystalEdge> edges;
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Connected component of `w` in the crystal of words, closed under ẽ_i and
/// f̃_i. Throws SizeLimitExceeded past `max_vertices`.
CrystalGraph component(Word const& w, std::size_t max_vertices);

std::string to_dot(CrystalGraph const& g);

}  // namespace plactic
