#pragma once

#include <string>

#include "json.hpp"
#include "plactic/crystal.hpp"
#include "plactic/rewriting.hpp"
#include "plactic/tableaux.hpp"

namespace plactic {

/// Words serialize as arrays of signed integers (negative = barred).
nlohmann::json word_to_json(Word const& w);
Word word_from_json(nlohmann::json const& j, int n);

/// {"n": int, "columns": [[signed ints]...]}, columns left to right.
nlohmann::json tableau_to_json(SymplecticTableau const& t);
/// Throws std::invalid_argument on a malformed document or an invalid tableau.
SymplecticTableau tableau_from_json(nlohmann::json const& j);

/// {"n", "generators": [...], "rules": [{"lhs": [u, v], "rhs": [...], "annihilating": bool}]}
nlohmann::json rule_table_to_json(AcolSystem const& system);

nlohmann::json completion_to_json(CompletionReport const& report, std::size_t sample = 20);

nlohmann::json crystal_graph_to_json(CrystalGraph const& g);

}  // namespace plactic
