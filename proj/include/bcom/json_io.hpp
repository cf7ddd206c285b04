#pragma once

#include <string>

#include "json.hpp"

#include "bcom/case_studies.hpp"
#include "bcom/diagram.hpp"
#include "bcom/group.hpp"
#include "bcom/homology.hpp"
#include "bcom/simplicial.hpp"

namespace bcom {

using json = nlohmann::ordered_json;

// { "name": ..., "order": n, "mul": [[...]], "labels": [...] }
json group_to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const json& j);
FiniteGroup load_group_file(const std::string& path);

// { "max_degree": K, "dims": [...], "simplices": [[key...]...],
//   "face": [degree][i][simplex], "degeneracy": [degree][j][simplex] }
json sset_to_json(const SimplicialSet& X);
SSetPtr sset_from_json(const json& j);

json betti_to_json(const BettiTable& t);
std::string betti_to_csv(const BettiTable& t);

// Poset-shaped diagrams:
// { "objects": n, "leq": [[i,j]...], "values": [sset...],
//   "maps": [{"src":i,"tgt":j,"at":[[...]per degree]}...] }
json diagram_to_json(const Diagram& D_);
Diagram diagram_from_json(const json& j);

json check_results_to_json(const std::vector<CheckResult>& results);

}  // namespace bcom
