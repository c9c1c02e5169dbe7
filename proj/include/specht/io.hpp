#pragma once

#include <json.hpp>

#include "specht/hom.hpp"

namespace specht {

using json = nlohmann::json;

// multipartition: [[3,2],[1]]; node: [comp,row,col];
// tableau: {"shape": ..., "entries": [[node, value], ...]}
json to_json_value(const Multipartition& m);
json to_json_value(const Node& n);
json to_json_value(const Tableau& t);
json to_json_value(const QuantumChar& e);
json to_json_value(const HomCertificate& c);
json to_json_value(const HomSpaceReport& r);
json to_json_value(const CpPair& p, QuantumChar e, const Multicharge& k);
json to_json_value(const DegenerationReport& r);
json to_json_value(const ProofTrace& t);

Multipartition multipartition_from_json(const json& j);
Node node_from_json(const json& j);
Tableau tableau_from_json(const json& j);
QuantumChar quantum_char_from_json(const json& j);
HomCertificate certificate_from_json(const json& j);

}  // namespace specht
