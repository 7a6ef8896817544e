#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace plactic {

/// Outcome of one verification suite. `witness` carries the inputs and
/// verdicts of the first failing case.
struct CheckReport {
  std::string suite;
  std::string universe;
  std::uint64_t cases = 0;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::optional<nlohmann::json> witness;
  nlohmann::json details = nlohmann::json::object();

  bool ok() const { return failures == 0; }
  void record(bool passed, nlohmann::json const& witness_if_failed = {});

  bool operator==(CheckReport const&) const = default;
};

void to_json(nlohmann::json& j, CheckReport const& r);
void from_json(nlohmann::json const& j, CheckReport& r);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string const& what, std::uint64_t estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

inline constexpr std::uint64_t kDefaultWordBudget = 2'000'000;

/// Partitions all words with 1 <= length <= max_len by P(w), by the acol
/// normal form and by the crystal label; passes when all three coincide.
CheckReport run_cross_section_check(int n, std::size_t max_len,
                                    std::uint64_t budget = kDefaultWordBudget);

/// Same comparison plus the congruence closure (undirected R1/R2/R3 steps
/// with length cap `max_len + slack`).
CheckReport run_congruence_check(int n, std::size_t max_len, std::size_t slack = 2);

/// Admissible pairs (U, V) with V not ⪯ U: P(uv) has at most two columns and
/// a right column shorter than U.
CheckReport run_lemma_checks(int n);

/// Normal forms under leftmost, rightmost and each seeded random strategy
/// agree, and every step decreases ≺. `sample == 0` means exhaustive over
/// lengths 1..max_len; otherwise `sample` words drawn with `sample_seed`.
CheckReport run_confluence_check(int n, std::size_t max_len, std::vector<std::uint64_t> const& seeds,
                                 std::size_t sample = 0, std::uint64_t sample_seed = 1);

/// Admissibility by counts agrees with splittability on every column.
CheckReport run_sheats_check(int n);

/// Letter rules strictly decrease reverse deglex; column rules have
/// irreducible right-hand sides and decrease ≺.
CheckReport run_orientation_check(int n);

/// Both sides of every kappa, kappa', xi, xi', zeta and gamma instance reach
/// the same acol normal form.
CheckReport run_tietze_check(int n);

/// Overlapping triples c_u c_v c_t resolve to one normal form.
/// `sample == 0` means every triple.
CheckReport run_local_confluence_check(int n, std::size_t sample = 0, std::uint64_t seed = 1);

/// ẽ_i and f̃_i are mutually inverse and match the reduced signature counts.
CheckReport run_crystal_check(int n, std::size_t max_len);

/// P(w(T)) = T for every symplectic tableau with at most `max_columns` columns.
CheckReport run_reading_check(int n, std::size_t max_columns);

/// Completion of the type-A Knuth relations over {1..m} stays open within the
/// bounds and produces 2 3 2^i 1 2 4 -> 2 3 4 2^i 1 2 for every i in `family`.
CheckReport run_completion_check(int m, std::size_t max_rules, std::size_t max_pairs,
                                 std::vector<int> const& family);

struct CheckOptions {
  int n = 2;
  std::size_t max_len = 6;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
};

/// Every suite at the given scale.
std::vector<CheckReport> run_all_checks(CheckOptions const& options);

}  // namespace plactic
