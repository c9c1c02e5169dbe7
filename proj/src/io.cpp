#include "specht/io.hpp"

namespace specht {

json to_json_value(const Multipartition& m) {
    json j = json::array();
    for (const auto& p : m.comps) j.push_back(p);
    return j;
}

json to_json_value(const Node& n) { return json::array({n.comp, n.row, n.col}); }

json to_json_value(const Tableau& t) {
    json ent = json::array();
    auto nodes = t.shape.nodes();
    for (size_t k = 0; k < nodes.size(); ++k) ent.push_back(json::array({to_json_value(nodes[k]), t.entries[k]}));
    return {{"shape", to_json_value(t.shape)}, {"entries", ent}};
}

json to_json_value(const QuantumChar& e) {
    if (e.infinite()) return "inf";
    return e.e;
}

namespace {

json terms_json(const std::vector<Term>& ts) {
    json j = json::array();
    for (const auto& t : ts) j.push_back(json::array({to_json_value(t.tableau), t.coef}));
    return j;
}

std::vector<Term> terms_from_json(const json& j) {
    std::vector<Term> out;
    for (const auto& x : j) out.push_back({tableau_from_json(x.at(0)), x.at(1).get<std::string>()});
    return out;
}

json shape_json(const Shape& s) {
    json j = json::array();
    for (const auto& n : s.nodes) j.push_back(to_json_value(n));
    return j;
}

}  // namespace

json to_json_value(const HomCertificate& c) {
    json mod = {{"lambda", to_json_value(c.mu)}, {"e", to_json_value(c.e)}, {"kappa", c.kappa.kappa},
                {"ring", c.ring.str()}};
    return {{"lambda", to_json_value(c.lambda)},
            {"mu", to_json_value(c.mu)},
            {"e", to_json_value(c.e)},
            {"kappa", c.kappa.kappa},
            {"ring", c.ring.str()},
            {"degree", c.degree},
            {"image", {{"module", mod}, {"terms", terms_json(c.image)}}},
            {"verified", c.verified},
            {"degenerate", c.degenerate},
            {"provenance", c.provenance},
            {"notes", c.notes}};
}

json to_json_value(const HomSpaceReport& r) {
    json basis = json::array();
    for (const auto& b : r.basis) basis.push_back(terms_json(b));
    return {{"degree", r.degree},
            {"target_degree", r.target_degree},
            {"component_size", r.component_size},
            {"dimension", r.dimension()},
            {"basis", basis}};
}

json to_json_value(const CpPair& p, QuantumChar e, const Multicharge& k) {
    json chain = json::array();
    for (const auto& s : p.chain) chain.push_back(shape_json(s));
    return {{"lambda", to_json_value(p.lambda)}, {"mu", to_json_value(p.mu)},
            {"nu", to_json_value(p.nu)},         {"e", to_json_value(e)},
            {"kappa", k.kappa},                  {"mu_star", shape_json(p.mu_star)},
            {"lambda_star", shape_json(p.lambda_star)}, {"chain", chain},
            {"a", p.a},                          {"b", p.b},
            {"c", p.c},                          {"d", p.d},
            {"degree", p.degree},                {"target", to_json_value(target_tableau(p))},
            {"notes", p.notes}};
}

json to_json_value(const DegenerationReport& r) {
    json rows = json::array();
    for (const auto& x : r.rows)
        rows.push_back({{"setting", x.setting}, {"degree", x.degree}, {"component_size", x.component_size},
                        {"dimension", x.dimension}});
    return {{"r", r.r},
            {"a", r.a},
            {"e0", r.e0},
            {"phi_at_one", r.phi_at_one.get_str()},
            {"rows", rows},
            {"nonzero_char0", r.nonzero_char0},
            {"nonzero_charr", r.nonzero_charr},
            {"implication_holds", r.implication_holds},
            {"degrees_preserved", r.degrees_coincide}};
}

json to_json_value(const ProofTrace& t) {
    json j = {{"complete", t.complete}, {"message", t.message}, {"survivors", terms_json(t.survivors)}};
    if (t.restricted) j["restricted"] = to_json_value(*t.restricted);
    return j;
}

Multipartition multipartition_from_json(const json& j) {
    std::vector<Partition> comps;
    for (const auto& p : j) comps.push_back(p.get<Partition>());
    return Multipartition(comps);
}

Node node_from_json(const json& j) { return Node{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()}; }

Tableau tableau_from_json(const json& j) {
    Multipartition shape = multipartition_from_json(j.at("shape"));
    auto nodes = shape.nodes();
    std::vector<int> entries(nodes.size(), 0);
    if (j.at("entries").size() != nodes.size()) throw std::invalid_argument("tableau entry count mismatch");
    for (const auto& x : j.at("entries")) {
        Node n = node_from_json(x.at(0));
        auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
        if (it == nodes.end() || !(*it == n)) throw std::invalid_argument("tableau node outside shape");
        entries[it - nodes.begin()] = x.at(1).get<int>();
    }
    return Tableau(shape, entries);
}

QuantumChar quantum_char_from_json(const json& j) {
    if (j.is_string()) return QuantumChar::parse(j.get<std::string>());
    return QuantumChar(j.get<int>());
}

HomCertificate certificate_from_json(const json& j) {
    HomCertificate c;
    c.lambda = multipartition_from_json(j.at("lambda"));
    c.mu = multipartition_from_json(j.at("mu"));
    c.e = quantum_char_from_json(j.at("e"));
    c.kappa = Multicharge(j.at("kappa").get<std::vector<int>>(), c.e);
    c.ring = RingSpec::parse(j.at("ring").get<std::string>());
    c.degree = j.at("degree").get<int>();
    c.image = terms_from_json(j.at("image").at("terms"));
    c.verified = j.value("verified", false);
    c.degenerate = j.value("degenerate", false);
    c.provenance = j.value("provenance", std::string("CarterPayne"));
    c.notes = j.value("notes", std::vector<std::string>{});
    return c;
}

}  // namespace specht
