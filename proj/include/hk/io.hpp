#pragma once

// Text and JSON forms of words, factorizations, biwords, tableaux and results.
//
// Tableau text lists rows bottom to top separated by '|'. A cell is '.', for a cell of the
// inner shape, a run of digits (one letter per digit), or a braced list such as {10,12}.
// Example: "1 1 1 12 234 5 | 2 23 3 | 4 4 5 | 5".

#include <string>

#include "hk/crystal_graph.hpp"
#include "hk/factorization.hpp"
#include "hk/grothendieck.hpp"
#include "hk/insertion.hpp"
#include "hk/tableau.hpp"
#include "hk/uncrowding.hpp"
#include "hk/verification.hpp"
#include "json.hpp"

namespace hk {

using Json = nlohmann::json;

std::string to_text(const SetValuedTableau& t);
std::string to_text(const Tableau& t);
SetValuedTableau parse_svt(const std::string& text);
Tableau parse_tableau(const std::string& text);  // every cell a single letter

bool looks_like_json(const std::string& text);

Json to_json(const HeckeWord& w);
Json to_json(const DecreasingFactorization& f);
Json to_json(const HeckeBiword& b);
Json to_json(const Tableau& t);
Json to_json(const SetValuedTableau& t);
Json to_json(const HeckeInsertion& r);
Json to_json(const StarInsertion& r);
Json to_json(const Uncrowding& u);
Json to_json(const BetaSchurSeries& s);
Json to_json(const CrystalGraph& g);
Json to_json(const Report& r);

// Each throws ValidationError on missing or ill-typed fields.
HeckeWord word_from_json(const Json& j);
DecreasingFactorization factorization_from_json(const Json& j);
HeckeBiword biword_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
SetValuedTableau svt_from_json(const Json& j);
BetaSchurSeries series_from_json(const Json& j);

}  // namespace hk
