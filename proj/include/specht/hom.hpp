#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specht/engine.hpp"
#include "specht/linalg.hpp"

namespace specht {

struct RelationGenerator {
    enum class Kind { dot, row_psi, garnir, residue_idem };
    Kind kind = Kind::dot;
    int index = 0;  // r for dot / row_psi
    Node node{};    // Garnir node
    std::string str() const;
};

std::vector<RelationGenerator> relation_generators(const Multipartition& lambda);

// node index (0-based) of a node in the node order of lambda
int node_index_in(const Multipartition& lambda, const Node& n);

// Garnir element of lambda at node A as (coefficient, crossing word) pairs
std::vector<std::pair<mpz_class, Word>> garnir_element(const Multipartition& lambda, const Node& A, QuantumChar e);

template <class Ctx>
typename Engine<Ctx>::Vec apply_relation(Engine<Ctx>& E, const typename Engine<Ctx>::Vec& v,
                                         const RelationGenerator& g, const Multipartition& lambda,
                                         const std::vector<int>& ilam) {
    using Vec = typename Engine<Ctx>::Vec;
    const Ctx& k = E.ctx();
    switch (g.kind) {
        case RelationGenerator::Kind::dot: return E.act(v, static_cast<Letter>(-g.index));
        case RelationGenerator::Kind::row_psi: return E.act(v, static_cast<Letter>(g.index));
        case RelationGenerator::Kind::residue_idem: {
            // v - v e(i^lambda)
            Vec out;
            for (const auto& [i, c] : v)
                if (E.residues(i) != ilam) out.emplace_back(i, c);
            return out;
        }
        default: {
            Vec acc;
            for (const auto& [c, w] : garnir_element(lambda, g.node, E.e())) {
                auto part = E.apply(v, w);
                acc = E.add_vec(acc, part, k.from_mpz(c));
            }
            return acc;
        }
    }
}

struct VerifyOutcome {
    bool ok = true;
    bool degenerate = false;
    std::vector<std::string> failures;
};

template <class Ctx>
VerifyOutcome verify_image(Engine<Ctx>& E, const typename Engine<Ctx>::Vec& image, const Multipartition& lambda,
                           int degree) {
    VerifyOutcome out;
    auto ilam = initial_residues(lambda, E.e(), E.kappa());
    int want = specht::degree(Tableau::initial(lambda), E.e(), E.kappa()) + degree;
    if (image.empty()) out.degenerate = true;
    for (const auto& [i, c] : image) {
        if (E.residues(i) != ilam) {
            out.ok = false;
            out.failures.push_back("residue sequence of " + render_tableau(E.tableau(i)) + " differs from i^lambda");
        }
        if (E.degree_of(i) != want) {
            out.ok = false;
            out.failures.push_back("degree of " + render_tableau(E.tableau(i)) + " is " +
                                   std::to_string(E.degree_of(i)) + ", expected " + std::to_string(want));
        }
    }
    for (const auto& g : relation_generators(lambda)) {
        auto r = apply_relation(E, image, g, lambda, ilam);
        if (!r.empty()) {
            out.ok = false;
            out.failures.push_back("relation " + g.str() + " does not annihilate the image");
        }
    }
    return out;
}

template <class Ctx>
struct HomSpace {
    int target_degree = 0;  // absolute degree in S^mu
    std::vector<Tableau> component;
    std::vector<typename Engine<Ctx>::Vec> basis;  // engine vectors
};

// Hom(S^lambda<degree>, S^mu) realized as images of v_{t^lambda} in the engine's module S^mu
template <class Ctx>
HomSpace<Ctx> hom_space(Engine<Ctx>& E, const Multipartition& lambda, int degree) {
    using T = typename Ctx::T;
    if (lambda.size() != E.n()) throw std::invalid_argument("hom_space: |lambda| != |mu|");
    if (lambda.level() != E.shape().level()) throw std::invalid_argument("hom_space: level mismatch");
    HomSpace<Ctx> out;
    auto ilam = initial_residues(lambda, E.e(), E.kappa());
    out.target_degree = specht::degree(Tableau::initial(lambda), E.e(), E.kappa()) + degree;
    out.component = std_tableaux_with(E.shape(), E.e(), E.kappa(), &ilam, &out.target_degree);
    if (out.component.empty()) return out;
    std::vector<int> ids;
    for (const auto& t : out.component) ids.push_back(E.id(t));
    auto gens = relation_generators(lambda);
    std::map<std::pair<int, int>, SparseRow<T>> rows;
    for (size_t col = 0; col < ids.size(); ++col)
        for (size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].kind == RelationGenerator::Kind::residue_idem) continue;
            for (const auto& [u, c] : apply_relation(E, E.basis(ids[col]), gens[g], lambda, ilam))
                rows[{static_cast<int>(g), u}].emplace_back(static_cast<int>(col), c);
        }
    std::vector<SparseRow<T>> mat;
    for (auto& [key, r] : rows) mat.push_back(std::move(r));
    for (const auto& x : nullspace(E.ctx(), mat, static_cast<int>(ids.size()))) {
        typename Engine<Ctx>::Vec v;
        for (size_t col = 0; col < ids.size(); ++col)
            if (!E.ctx().is_zero(x[col])) v.emplace_back(ids[col], x[col]);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.basis.push_back(std::move(v));
    }
    return out;
}

// ring-erased records

struct Term {
    Tableau tableau;
    std::string coef;
    bool operator==(const Term&) const = default;
};

struct HomCertificate {
    Multipartition lambda, mu;
    QuantumChar e;
    Multicharge kappa;
    RingSpec ring;
    int degree = 0;
    std::vector<Term> image;
    bool verified = false;
    bool degenerate = false;
    std::string provenance = "CarterPayne";
    std::vector<std::string> notes;
    bool operator==(const HomCertificate&) const = default;
};

struct HomSpaceReport {
    int degree = 0;
    int target_degree = 0;
    int component_size = 0;
    std::vector<std::vector<Term>> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
};

HomSpaceReport hom_space_report(const Multipartition& lambda, const Multipartition& mu, int degree, QuantumChar e,
                                const Multicharge& kappa, RingSpec ring);

// possible Hom degrees: degrees of tableaux of mu with residue sequence i^lambda, shifted by deg t^lambda
std::vector<int> candidate_degrees(const Multipartition& lambda, const Multipartition& mu, QuantumChar e,
                                   const Multicharge& kappa);

// budget_secs > 0 bounds the engine time; an exhausted budget leaves verified = false
bool verify(HomCertificate& cert, double budget_secs = 0);
HomCertificate carter_payne(const Multipartition& lambda, const Multipartition& mu, QuantumChar e,
                            const Multicharge& kappa, RingSpec ring, bool run_verify = true);

struct DegenerationRow {
    std::string setting;  // "p=0,e=4" style
    int degree = 0;
    int component_size = 0;
    int dimension = 0;
};

struct DegenerationReport {
    int r = 0, a = 0, e0 = 0;
    mpz_class phi_at_one;
    std::vector<DegenerationRow> rows;
    std::vector<int> nonzero_char0, nonzero_charr;
    bool implication_holds = false;
    bool degrees_coincide = false;  // every char-0 nonzero degree is nonzero in char r
    std::string str() const;
};

DegenerationReport degeneration_check(const Multipartition& lambda, const Multipartition& mu, int r, int a,
                                      std::optional<Multicharge> kappa = std::nullopt);

struct ProofTrace {
    bool complete = false;
    std::string message;
    std::vector<Term> survivors;  // terms of v L in S^nu outside the discarded span
    std::optional<Tableau> restricted;  // basic-strand restriction of the single survivor
};

// Reduces v_{t_lambda^nu} L in S^nu with L = y_{n+1}^c (row shapes) or the
// elementary symmetric polynomial of degree d in dots on basic strings of the
// diagonal residue, keeping terms whose restriction to 1..n has shape dominated by mu.
ProofTrace cp_proof_trace(const CpPair& pair, QuantumChar e, const Multicharge& kappa, RingSpec ring,
                          double budget_secs);

}  // namespace specht
