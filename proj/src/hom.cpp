#include "specht/hom.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "specht/cyclotomic.hpp"

namespace specht {

std::string RelationGenerator::str() const {
    switch (kind) {
        case Kind::dot: return "DotRel(" + std::to_string(index) + ")";
        case Kind::row_psi: return "RowPsi(" + std::to_string(index) + ")";
        case Kind::garnir: return "Garnir" + node.str();
        default: return "ResidueIdem";
    }
}

std::vector<RelationGenerator> relation_generators(const Multipartition& lambda) {
    std::vector<RelationGenerator> out;
    int n = lambda.size();
    auto nodes = lambda.nodes();
    for (int r = 1; r <= n; ++r) out.push_back({RelationGenerator::Kind::dot, r, {}});
    for (int r = 1; r < n; ++r) {
        const Node& a = nodes[r - 1];
        const Node& b = nodes[r];
        if (a.comp == b.comp && a.row == b.row) out.push_back({RelationGenerator::Kind::row_psi, r, {}});
    }
    for (const auto& nd : nodes)
        if (lambda.contains({nd.comp, nd.row + 1, nd.col})) out.push_back({RelationGenerator::Kind::garnir, 0, nd});
    out.push_back({RelationGenerator::Kind::residue_idem, 0, {}});
    return out;
}

int node_index_in(const Multipartition& lambda, const Node& n) {
    auto nodes = lambda.nodes();
    auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    if (it == nodes.end() || !(*it == n)) throw std::out_of_range("node not in multipartition");
    return static_cast<int>(it - nodes.begin());
}

std::vector<std::pair<mpz_class, Word>> garnir_element(const Multipartition& lambda, const Node& A, QuantumChar e) {
    if (!lambda.contains({A.comp, A.row + 1, A.col})) throw std::invalid_argument("not a Garnir node");
    int k1 = lambda.row_len(A.comp, A.row) - A.col + 1;
    int k2 = A.col;
    int a = node_index_in(lambda, A);
    const GarnirBelt& gb = garnir_belt(e, k1, k2);
    std::vector<std::pair<mpz_class, Word>> out;
    for (size_t s = 0; s < gb.words.size(); ++s) {
        Word w;
        for (Letter l : gb.words[s]) w.push_back(static_cast<Letter>(l > 0 ? l + a : l - a));
        out.emplace_back(gb.coeffs[s], std::move(w));
    }
    return out;
}

namespace {

template <class F>
auto with_ring(RingSpec ring, F&& f) {
    switch (ring.kind) {
        case RingKind::rationals: return f(RationalCtx{});
        case RingKind::prime_field: return f(ModPCtx(ring.p));
        default: return f(Int64Ctx{});
    }
}

template <class Ctx>
std::vector<Term> to_terms(const Engine<Ctx>& E, const typename Engine<Ctx>::Vec& v) {
    std::vector<Term> out;
    for (const auto& [t, c] : E.terms(v)) out.push_back({t, E.ctx().str(c)});
    return out;
}

template <class Ctx>
typename Ctx::T parse_coef(const Ctx& k, const std::string& s) {
    if constexpr (std::is_same_v<Ctx, ModPCtx>) {
        std::istringstream in(s);
        long v;
        in >> v;
        return k.from_int(v);
    } else {
        return k.parse(s);
    }
}

}  // namespace

HomSpaceReport hom_space_report(const Multipartition& lambda, const Multipartition& mu, int degree, QuantumChar e,
                                const Multicharge& kappa, RingSpec ring) {
    return with_ring(ring, [&](auto ctx) {
        using Ctx = decltype(ctx);
        HomSpaceReport rep;
        rep.degree = degree;
        run_with_stack([&] {
            Engine<Ctx> E(mu, e, kappa, ctx);
            auto hs = hom_space(E, lambda, degree);
            rep.target_degree = hs.target_degree;
            rep.component_size = static_cast<int>(hs.component.size());
            for (const auto& v : hs.basis) rep.basis.push_back(to_terms(E, v));
        });
        return rep;
    });
}

std::vector<int> candidate_degrees(const Multipartition& lambda, const Multipartition& mu, QuantumChar e,
                                   const Multicharge& kappa) {
    auto ilam = initial_residues(lambda, e, kappa);
    int base = degree(Tableau::initial(lambda), e, kappa);
    std::set<int> ds;
    for (const auto& t : std_tableaux_with(mu, e, kappa, &ilam, nullptr)) ds.insert(degree(t, e, kappa) - base);
    return {ds.begin(), ds.end()};
}

bool verify(HomCertificate& cert, double budget_secs) {
    VerifyOutcome out = with_ring(cert.ring, [&](auto ctx) {
        using Ctx = decltype(ctx);
        VerifyOutcome res;
        run_with_stack([&] {
            Engine<Ctx> E(cert.mu, cert.e, cert.kappa, ctx);
            if (budget_secs > 0)
                E.set_deadline(std::chrono::steady_clock::now() +
                               std::chrono::milliseconds(static_cast<long>(budget_secs * 1000)));
            typename Engine<Ctx>::Vec v;
            for (const auto& t : cert.image) {
                auto c = parse_coef(ctx, t.coef);
                if (!ctx.is_zero(c)) v.emplace_back(E.id(t.tableau), c);
            }
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            try {
                res = verify_image(E, v, cert.lambda, cert.degree);
            } catch (const BudgetExceeded&) {
                res.ok = false;
                res.failures.push_back("Incomplete: verification budget exceeded");
            }
        });
        return res;
    });
    cert.verified = out.ok;
    cert.degenerate = out.degenerate;
    for (const auto& f : out.failures) cert.notes.push_back(f);
    if (out.degenerate) cert.notes.push_back("zero image: degenerate map");
    return cert.verified;
}

HomCertificate carter_payne(const Multipartition& lambda, const Multipartition& mu, QuantumChar e,
                            const Multicharge& kappa, RingSpec ring, bool run_verify) {
    auto det = detect_cp_pair(lambda, mu, e, kappa);
    if (!det.ok()) throw std::invalid_argument("NotAPair: " + det.failure.reason);
    const CpPair& p = *det.pair;
    HomCertificate cert;
    cert.lambda = lambda;
    cert.mu = mu;
    cert.e = e;
    cert.kappa = kappa;
    cert.ring = ring;
    cert.degree = p.degree;
    Tableau t = target_tableau(p);
    cert.image.push_back({t, "1"});
    if (!t.is_standard()) cert.notes.push_back("target tableau is not standard");
    int dd = degree(t, e, kappa) - degree(Tableau::initial(lambda), e, kappa);
    if (dd != p.degree)
        cert.notes.push_back("tableau degree difference " + std::to_string(dd) + " differs from a-b+2d");
    if (run_verify) verify(cert);
    return cert;
}

std::string DegenerationReport::str() const {
    std::ostringstream os;
    os << "Phi_" << e0 << "(1) = " << phi_at_one.get_str() << "\n";
    os << "setting\tdegree\tcomponent\tdim\n";
    for (const auto& r : rows) os << r.setting << "\t" << r.degree << "\t" << r.component_size << "\t" << r.dimension << "\n";
    auto list = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s.empty() ? std::string("none") : s;
    };
    os << "nonzero degrees (p=0, e=" << e0 << "): " << list(nonzero_char0) << "\n";
    os << "nonzero degrees (p=" << r << ", e=" << r << "): " << list(nonzero_charr) << "\n";
    os << "nonzero implies nonzero: " << (implication_holds ? "yes" : "no") << "\n";
    os << "degrees preserved: " << (degrees_coincide ? "yes" : "no") << "\n";
    return os.str();
}

DegenerationReport degeneration_check(const Multipartition& lambda, const Multipartition& mu, int r, int a,
                                      std::optional<Multicharge> kappa) {
    if (!is_prime(static_cast<uint64_t>(r))) throw std::invalid_argument("degeneration_check: r must be prime");
    if (a < 1) throw std::invalid_argument("degeneration_check: a must be >= 1");
    DegenerationReport rep;
    rep.r = r;
    rep.a = a;
    int e0 = 1;
    for (int i = 0; i < a; ++i) e0 *= r;
    rep.e0 = e0;
    rep.phi_at_one = cyclotomic_at_one(e0);
    std::vector<int> k0 = kappa ? kappa->kappa : std::vector<int>(lambda.level(), 0);
    auto sweep = [&](QuantumChar e, RingSpec ring, std::vector<int>& nonzero) {
        Multicharge k(k0, e);
        for (int d : candidate_degrees(lambda, mu, e, k)) {
            auto hs = hom_space_report(lambda, mu, d, e, k, ring);
            rep.rows.push_back({"p=" + std::to_string(ring.p) + ",e=" + std::to_string(e.e), d, hs.component_size,
                                hs.dimension()});
            if (hs.dimension() > 0) nonzero.push_back(d);
        }
    };
    sweep(QuantumChar(e0), RingSpec{RingKind::rationals, 0}, rep.nonzero_char0);
    sweep(QuantumChar(r), RingSpec{RingKind::prime_field, static_cast<uint32_t>(r)}, rep.nonzero_charr);
    rep.implication_holds = rep.nonzero_char0.empty() || !rep.nonzero_charr.empty();
    rep.degrees_coincide = std::includes(rep.nonzero_charr.begin(), rep.nonzero_charr.end(), rep.nonzero_char0.begin(),
                                         rep.nonzero_char0.end());
    return rep;
}

ProofTrace cp_proof_trace(const CpPair& pair, QuantumChar e, const Multicharge& kappa, RingSpec ring,
                          double budget_secs) {
    return with_ring(ring, [&](auto ctx) {
        using Ctx = decltype(ctx);
        ProofTrace out;
        run_with_stack([&] {
            try {
                Engine<Ctx> E(pair.nu, e, kappa, ctx);
                E.set_deadline(std::chrono::steady_clock::now() +
                               std::chrono::milliseconds(static_cast<long>(budget_secs * 1000)));
                int n = pair.lambda.size();
                Tableau start = extended_initial(pair);
                auto v = E.basis(E.id(start));
                typename Engine<Ctx>::Vec res;
                if (pair.mu_star.partition().size() == 1 && pair.mu_star.partition()[0] >= 1 &&
                    pair.mu_star.size() == pair.mu_star.partition()[0]) {
                    res = v;
                    for (int k = 0; k < pair.c; ++k) res = E.act(res, static_cast<Letter>(-(n + 1)));
                } else {
                    int i1 = residue(pair.mu_star.top_left(), e, kappa);
                    auto seq = start.residue_sequence(e, kappa);
                    std::vector<int> strands;
                    for (int p = 1; p <= n; ++p)
                        if (seq[p - 1] == i1) strands.push_back(p);
                    int m = static_cast<int>(strands.size());
                    std::vector<int> pick;
                    std::function<void(int)> rec = [&](int from) {
                        if (static_cast<int>(pick.size()) == pair.d) {
                            auto w = v;
                            for (int s : pick) w = E.act(w, static_cast<Letter>(-s));
                            res = E.add_vec(res, w, ctx.one());
                            return;
                        }
                        for (int j = from; j < m; ++j) {
                            pick.push_back(strands[j]);
                            rec(j + 1);
                            pick.pop_back();
                        }
                    };
                    rec(0);
                }
                typename Engine<Ctx>::Vec kept;
                for (const auto& [i, c] : res) {
                    Order o = dominance(E.tableau(i).restrict(n).shape, pair.mu);
                    if (o == Order::less || o == Order::equal) kept.emplace_back(i, c);
                }
                out.survivors = to_terms(E, kept);
                out.complete = true;
                if (kept.size() == 1) {
                    out.restricted = E.tableau(kept[0].first).restrict(n);
                    out.message = "single survivor";
                } else {
                    out.message = std::to_string(kept.size()) + " survivors";
                }
            } catch (const BudgetExceeded&) {
                out.complete = false;
                out.message = "Incomplete: budget exceeded";
            }
        });
        return out;
    });
}

}  // namespace specht
