#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "specht/cyclotomic.hpp"
#include "specht/io.hpp"

using namespace specht;

namespace {

struct RunConfig {
    std::string format = "text";
    int jobs = 1;
    double budget = 60;
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double env_budget(double fallback) {
    const char* s = std::getenv("SPECHT_CP_BUDGET_SECS");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (*end || v <= 0) throw Usage("SPECHT_CP_BUDGET_SECS must be a positive number");
    return v;
}

Multicharge charge_for(const std::string& s, int level, QuantumChar e) {
    if (s.empty()) return Multicharge(std::vector<int>(level, 0), e);
    Multicharge k = Multicharge::parse(s, e);
    if (k.level() != level) throw Usage("kappa length must equal the level");
    return k;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_pair_text(std::ostream& os, const CpPair& p) {
    os << "lambda: " << p.lambda.str() << "\n";
    os << "mu:     " << p.mu.str() << "\n";
    os << "nu:     " << p.nu.str() << "\n";
    os << "a=" << p.a << " b=" << p.b << " c=" << p.c << " d=" << p.d << "\n";
    os << "degree: " << p.degree << "\n";
    os << "t*:     " << render_tableau(target_tableau(p)) << "\n";
}

void print_cert_text(std::ostream& os, const HomCertificate& c) {
    os << "degree: " << c.degree << "\n";
    for (const auto& t : c.image) os << "image:  " << t.coef << " * " << render_tableau(t.tableau) << "\n";
    os << "ring:   " << c.ring.str() << "\n";
    os << "verified: " << yes_no(c.verified) << "\n";
    for (const auto& n : c.notes) os << "note: " << n << "\n";
}

void print_hom_text(std::ostream& os, const HomSpaceReport& r) {
    os << "degree " << r.degree << ": component " << r.component_size << ", dimension " << r.dimension() << "\n";
    for (size_t i = 0; i < r.basis.size(); ++i) {
        os << "  basis[" << i << "]:";
        for (const auto& t : r.basis[i]) os << " " << t.coef << " * " << render_tableau(t.tableau);
        os << "\n";
    }
}

int cmd_cp_pairs(const RunConfig& cfg, int n, const std::string& e_s, int level, const std::string& k_s, bool do_verify,
                 const std::string& ring_s) {
    if (n < 1 || level < 1) throw Usage("--n and --level must be positive");
    QuantumChar e = QuantumChar::parse(e_s);
    Multicharge k = charge_for(k_s, level, e);
    RingSpec ring = RingSpec::parse(ring_s);
    auto pairs = cp_pairs(n, e, k);
    std::vector<int> ok(pairs.size(), 1);
    if (do_verify) {
        std::mutex mu;
        size_t next = 0;
        auto worker = [&] {
            while (true) {
                size_t i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= pairs.size()) return;
                    i = next++;
                }
                auto c = carter_payne(pairs[i].lambda, pairs[i].mu, e, k, ring);
                ok[i] = c.verified;
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < std::max(1, cfg.jobs); ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    bool all = std::all_of(ok.begin(), ok.end(), [](int x) { return x != 0; });
    if (cfg.format == "json") {
        json arr = json::array();
        for (size_t i = 0; i < pairs.size(); ++i) {
            json j = to_json_value(pairs[i], e, k);
            if (do_verify) j["verified"] = ok[i] != 0;
            arr.push_back(j);
        }
        std::cout << json{{"n", n}, {"e", to_json_value(e)}, {"kappa", k.kappa}, {"pairs", arr}}.dump(2) << "\n";
    } else {
        std::cout << pairs.size() << " pairs (n=" << n << ", e=" << e.str() << ", kappa=" << k.str() << ")\n";
        for (size_t i = 0; i < pairs.size(); ++i) {
            std::cout << pairs[i].lambda.str() << " -> " << pairs[i].mu.str() << "  degree " << pairs[i].degree;
            if (do_verify) std::cout << "  verified " << yes_no(ok[i]);
            std::cout << "\n";
        }
    }
    return all ? 0 : 1;
}

int cmd_cp(const RunConfig& cfg, const std::string& l_s, const std::string& m_s, const std::string& e_s,
           const std::string& k_s, bool do_verify, const std::string& ring_s, bool trace) {
    Multipartition l = Multipartition::parse(l_s);
    Multipartition m = Multipartition::parse(m_s);
    QuantumChar e = QuantumChar::parse(e_s);
    Multicharge k = charge_for(k_s, l.level(), e);
    RingSpec ring = RingSpec::parse(ring_s);
    auto det = detect_cp_pair(l, m, e, k);
    if (!det.ok()) {
        std::cerr << "NotAPair: " << det.failure.reason << "\n";
        return 1;
    }
    HomCertificate cert = carter_payne(l, m, e, k, ring, false);
    if (do_verify) verify(cert, cfg.budget);
    std::optional<ProofTrace> tr;
    if (trace) tr = cp_proof_trace(*det.pair, e, k, ring, cfg.budget);
    if (cfg.format == "json") {
        json j = {{"pair", to_json_value(*det.pair, e, k)}, {"certificate", to_json_value(cert)}};
        if (tr) j["trace"] = to_json_value(*tr);
        std::cout << j.dump(2) << "\n";
    } else {
        print_pair_text(std::cout, *det.pair);
        print_cert_text(std::cout, cert);
        if (tr) {
            std::cout << "trace: " << tr->message << "\n";
            if (tr->restricted) std::cout << "trace restriction: " << render_tableau(*tr->restricted) << "\n";
        }
    }
    return (!do_verify || cert.verified) ? 0 : 1;
}

int cmd_hom(const RunConfig& cfg, const std::string& l_s, const std::string& m_s, std::optional<int> degree,
            const std::string& e_s, const std::string& k_s, const std::string& ring_s) {
    Multipartition l = Multipartition::parse(l_s);
    Multipartition m = Multipartition::parse(m_s);
    if (l.size() != m.size()) throw Usage("|lambda| must equal |mu|");
    if (l.level() != m.level()) throw Usage("lambda and mu must have the same level");
    QuantumChar e = QuantumChar::parse(e_s);
    Multicharge k = charge_for(k_s, l.level(), e);
    RingSpec ring = RingSpec::parse(ring_s);
    std::vector<int> degrees = degree ? std::vector<int>{*degree} : candidate_degrees(l, m, e, k);
    std::vector<HomSpaceReport> reps;
    for (int d : degrees) reps.push_back(hom_space_report(l, m, d, e, k, ring));
    bool ok = true;
    for (const auto& r : reps)
        for (const auto& b : r.basis) {
            HomCertificate c;
            c.lambda = l;
            c.mu = m;
            c.e = e;
            c.kappa = k;
            c.ring = ring;
            c.degree = r.degree;
            c.image = b;
            c.provenance = "SolverBasisVector";
            ok = verify(c, cfg.budget) && ok;
        }
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : reps) arr.push_back(to_json_value(r));
        std::cout << json{{"lambda", to_json_value(l)}, {"mu", to_json_value(m)}, {"e", to_json_value(e)},
                          {"kappa", k.kappa}, {"ring", ring.str()}, {"spaces", arr}, {"verified", ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "Hom(S^" << l.str() << ", S^" << m.str() << ") e=" << e.str() << " kappa=" << k.str()
                  << " ring=" << ring.str() << "\n";
        for (const auto& r : reps) print_hom_text(std::cout, r);
        std::cout << "basis vectors verified: " << yes_no(ok) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_degen(const RunConfig& cfg, const std::string& l_s, const std::string& m_s, int r, int a,
              const std::string& k_s) {
    Multipartition l = Multipartition::parse(l_s);
    Multipartition m = Multipartition::parse(m_s);
    if (l.size() != m.size()) throw Usage("|lambda| must equal |mu|");
    if (!is_prime(static_cast<uint64_t>(r < 0 ? 0 : r))) throw Usage("--r must be prime");
    if (a < 1) throw Usage("--a must be at least 1");
    std::optional<Multicharge> k;
    if (!k_s.empty()) k = Multicharge::parse(k_s, QuantumChar());
    auto rep = degeneration_check(l, m, r, a, k);
    if (cfg.format == "json")
        std::cout << to_json_value(rep).dump(2) << "\n";
    else
        std::cout << rep.str();
    return rep.implication_holds ? 0 : 1;
}

// printed values of the worked examples
struct Check {
    std::string what;
    bool ok;
};

int report_checks(const RunConfig& cfg, const std::string& name, const std::vector<Check>& checks, json extra) {
    bool all = true;
    for (const auto& c : checks) all = all && c.ok;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"check", c.what}, {"ok", c.ok}});
        extra["example"] = name;
        extra["checks"] = arr;
        extra["ok"] = all;
        std::cout << extra.dump(2) << "\n";
    } else {
        for (const auto& c : checks) std::cout << (c.ok ? "[ok]   " : "[FAIL] ") << c.what << "\n";
    }
    return all ? 0 : 1;
}

int example_4_4(const RunConfig& cfg) {
    Multipartition l = Multipartition::parse("(3,2)"), m = Multipartition::parse("(5)");
    QuantumChar e4(4), e2(2);
    Multicharge k4({0}, e4), k2({0}, e2);
    std::vector<Check> checks;
    auto q1 = hom_space_report(l, m, 1, e4, k4, RingSpec::parse("Q"));
    checks.push_back({"e=4 over Q: degree 1 hom space has dimension " + std::to_string(q1.dimension()),
                      q1.dimension() >= 1});
    json table = json::array();
    if (cfg.format != "json") {
        std::cout << "lambda=(3,2) mu=(5) kappa=(0)\n";
        std::cout << "e=4 over Q:\n";
        print_hom_text(std::cout, q1);
        std::cout << "e=2 over F2:\n";
    }
    int dim0 = -1, dim1 = -1;
    for (int d : candidate_degrees(l, m, e2, k2)) {
        auto r = hom_space_report(l, m, d, e2, k2, RingSpec::parse("F2"));
        if (d == 0) dim0 = r.dimension();
        if (d == 1) dim1 = r.dimension();
        table.push_back(to_json_value(r));
        if (cfg.format != "json") print_hom_text(std::cout, r);
    }
    if (dim1 < 0) dim1 = 0;
    checks.push_back({"e=2 over F2: degree 0 hom space has dimension " + std::to_string(dim0), dim0 >= 1});
    checks.push_back({"e=2 over F2: degree 1 hom space has dimension " + std::to_string(dim1), true});
    auto deg = degeneration_check(l, m, 2, 2);
    if (cfg.format != "json") std::cout << deg.str();
    checks.push_back({"degeneration (r,a)=(2,2): nonzero implies nonzero", deg.implication_holds});
    checks.push_back({"degeneration degrees are 1 in characteristic 0 and 0 in characteristic 2",
                      deg.nonzero_char0 == std::vector<int>{1} && deg.nonzero_charr == std::vector<int>{0}});
    return report_checks(cfg, "4.4", checks,
                         {{"hom_e4_Q", to_json_value(q1)}, {"hom_e2_F2", table}, {"degeneration", to_json_value(deg)}});
}

int example_5_2(const RunConfig& cfg) {
    Multipartition l = Multipartition::parse("(;3,2,2;4,3)"), m = Multipartition::parse("(3;3,2,2;4)");
    QuantumChar e(4);
    Multicharge k({0, 2, 1}, e);
    const std::string printed = "(3 7 14 | 1 2 6 / 4 5 / 11 13 | 8 9 10 12)";
    const std::string printed_prime = "(3 7 14 | 1 2 5 / 4 6 / 11 13 | 8 9 10 12)";
    auto det = detect_cp_pair(l, m, e, k);
    std::vector<Check> checks;
    if (!det.ok()) return report_checks(cfg, "5.2", {{"pair detected: " + det.failure.reason, false}}, json::object());
    const CpPair& p = *det.pair;
    auto cert = carter_payne(l, m, e, k, RingSpec::parse("Q"), false);
    verify(cert, cfg.budget);
    std::string got = render_tableau(cert.image[0].tableau);
    if (cfg.format != "json") {
        print_pair_text(std::cout, p);
        print_cert_text(std::cout, cert);
    }
    checks.push_back({"a=2 b=4 c=4", p.a == 2 && p.b == 4 && p.c == 4});
    checks.push_back({"degree 6", p.degree == 6 && cert.degree == 6});
    checks.push_back({"image is v_t* for t* = " + printed, got == printed});
    checks.push_back({"verified over Q", cert.verified});
    auto tr = cp_proof_trace(p, e, k, RingSpec::parse("Q"), cfg.budget);
    bool trace_ok = tr.complete && tr.restricted && render_tableau(*tr.restricted) == printed;
    checks.push_back({"reduction of v L leaves one survivor restricting to t* (" + tr.message + ")", trace_ok});
    QuantumChar e2(2);
    Multicharge k2({0, 2, 1}, e2);
    auto h7 = hom_space_report(l, m, 7, e2, k2, RingSpec::parse("F2"));
    bool has_prime = false;
    for (const auto& b : h7.basis)
        for (const auto& t : b) has_prime = has_prime || render_tableau(t.tableau) == printed_prime;
    if (cfg.format != "json") {
        std::cout << "e=p=2:\n";
        print_hom_text(std::cout, h7);
    }
    checks.push_back({"e=p=2 degree 7 hom space contains v_t' for t' = " + printed_prime, has_prime});
    return report_checks(cfg, "5.2", checks,
                         {{"pair", to_json_value(p, e, k)},
                          {"certificate", to_json_value(cert)},
                          {"trace", to_json_value(tr)},
                          {"hom_e2_degree7", to_json_value(h7)}});
}

int example_6_2(const RunConfig& cfg, bool full) {
    Multipartition l = Multipartition::parse("((5,5,4,3,3,1),(2,2,1),(3,3,2))");
    Multipartition m = Multipartition::parse("((8,7,4,3,3,1),(2,2,1),(3))");
    QuantumChar e(9);
    Multicharge k({0, 4, 6}, e);
    const std::string printed =
        "(1 2 3 4 5 18 19 20 / 6 7 8 9 10 21 34 / 11 12 13 14 / 15 16 17 / 23 31 32 / 25 | 22 30 / 24 33 / 26 | 27 28 "
        "29)";
    auto det = detect_cp_pair(l, m, e, k);
    if (!det.ok()) return report_checks(cfg, "6.2", {{"pair detected: " + det.failure.reason, false}}, json::object());
    const CpPair& p = *det.pair;
    auto cert = carter_payne(l, m, e, k, RingSpec::parse("Q"), false);
    std::vector<Check> checks;
    checks.push_back({"a=4 b=6 d=4", p.a == 4 && p.b == 6 && p.d == 4});
    checks.push_back({"degree 6", p.degree == 6});
    checks.push_back({"t* = " + printed, render_tableau(target_tableau(p)) == printed});
    if (full) {
        verify(cert, cfg.budget);
        checks.push_back({"verified over Q", cert.verified});
    }
    if (cfg.format != "json") {
        print_pair_text(std::cout, p);
        if (full)
            print_cert_text(std::cout, cert);
        else
            std::cout << "full verification not requested (--full)\n";
    }
    return report_checks(cfg, "6.2", checks, {{"pair", to_json_value(p, e, k)}, {"certificate", to_json_value(cert)}});
}

int cmd_verify_file(const RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read " + path);
    json j = json::parse(in);
    if (j.contains("certificate")) j = j["certificate"];
    HomCertificate c = certificate_from_json(j);
    c.notes.clear();
    verify(c, cfg.budget);
    if (cfg.format == "json")
        std::cout << to_json_value(c).dump(2) << "\n";
    else
        print_cert_text(std::cout, c);
    return c.verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded Specht module homomorphisms"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    std::optional<double> budget;
    app.add_option("--budget", budget, "engine time budget in seconds")->check(CLI::PositiveNumber);

    int n = 0, level = 1;
    std::string e_s = "inf", k_s, ring_s = "Q", l_s, m_s, ex, file;
    bool do_verify = false, trace = false, full = false;
    std::optional<int> degree;
    int r = 0, a = 0;

    auto* pairs = app.add_subcommand("cp-pairs", "list CP pairs of n");
    pairs->add_option("--n", n)->required();
    pairs->add_option("--e", e_s)->required();
    pairs->add_option("--level", level);
    pairs->add_option("--kappa", k_s);
    pairs->add_flag("--verify", do_verify);
    pairs->add_option("--ring", ring_s);

    auto* cp = app.add_subcommand("cp", "CP homomorphism certificate");
    cp->add_option("--lambda", l_s)->required();
    cp->add_option("--mu", m_s)->required();
    cp->add_option("--e", e_s)->required();
    cp->add_option("--kappa", k_s);
    cp->add_flag("--verify", do_verify);
    cp->add_option("--ring", ring_s);
    cp->add_flag("--trace", trace, "reduce v L in S^nu");

    auto* hom = app.add_subcommand("hom", "graded hom space by nullspace");
    hom->add_option("--lambda", l_s)->required();
    hom->add_option("--mu", m_s)->required();
    hom->add_option("--degree", degree);
    hom->add_option("--ring", ring_s);
    hom->add_option("--e", e_s);
    hom->add_option("--kappa", k_s);

    auto* degen = app.add_subcommand("degen", "(0, r^a) versus (r, r) hom spaces");
    degen->add_option("--lambda", l_s)->required();
    degen->add_option("--mu", m_s)->required();
    degen->add_option("--r", r)->required();
    degen->add_option("--a", a)->required();
    degen->add_option("--kappa", k_s);

    auto* example = app.add_subcommand("example", "reproduce a worked example");
    example->add_option("name", ex)->required()->check(CLI::IsMember({"4.4", "5.2", "6.2"}));
    example->add_flag("--full", full, "also verify example 6.2");

    auto* ver = app.add_subcommand("verify", "re-verify a certificate file");
    ver->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    int status = 2;
    try {
        cfg.budget = budget ? *budget : env_budget(cfg.budget);
        run_with_stack([&] {
            if (*pairs) status = cmd_cp_pairs(cfg, n, e_s, level, k_s, do_verify, ring_s);
            if (*cp) status = cmd_cp(cfg, l_s, m_s, e_s, k_s, do_verify, ring_s, trace);
            if (*hom) status = cmd_hom(cfg, l_s, m_s, degree, e_s, k_s, ring_s);
            if (*degen) status = cmd_degen(cfg, l_s, m_s, r, a, k_s);
            if (*example) {
                if (ex == "4.4") status = example_4_4(cfg);
                if (ex == "5.2") status = example_5_2(cfg);
                if (ex == "6.2") status = example_6_2(cfg, full);
            }
            if (*ver) status = cmd_verify_file(cfg, file);
        });
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
