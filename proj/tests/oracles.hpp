#pragma once
// Independent reference implementations used by the unit and acceptance tests.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/cyclotomic.hpp"
#include "specht/engine.hpp"
#include "specht/klr.hpp"
#include "specht/stubborn.hpp"

namespace oracle {

using namespace specht;

inline int res_of(int comp, int row, int col, QuantumChar e, const Multicharge& k) {
    return e.reduce(static_cast<long long>(col) - row + k.kappa[comp - 1]);
}

inline int len_or_zero(const Multipartition& l, int comp, int row) {
    const auto& p = l.comps[comp - 1];
    return row >= 1 && row <= static_cast<int>(p.size()) ? p[row - 1] : 0;
}

// addable / removable nodes by scanning every grid cell one past the diagram
inline std::pair<std::set<std::pair<Node, int>>, std::set<std::pair<Node, int>>> scan_addable_removable(
    const Multipartition& l, QuantumChar e, const Multicharge& k) {
    std::set<std::pair<Node, int>> add, rem;
    for (int m = 1; m <= l.level(); ++m) {
        int rows = static_cast<int>(l.comps[m - 1].size()) + 1;
        for (int r = 1; r <= rows; ++r)
            for (int c = 1; c <= len_or_zero(l, m, 1) + 1; ++c) {
                int here = len_or_zero(l, m, r);
                bool in = c <= here;
                if (!in && c == here + 1 && (r == 1 || len_or_zero(l, m, r - 1) >= c))
                    add.insert({Node{m, r, c}, res_of(m, r, c, e, k)});
                if (in && c == here && len_or_zero(l, m, r + 1) < c) rem.insert({Node{m, r, c}, res_of(m, r, c, e, k)});
            }
    }
    return {add, rem};
}

// shape occupied by the entries 1..m of t
inline Multipartition shape_of_first(const Tableau& t, int m) {
    auto nodes = t.shape.nodes();
    std::vector<Partition> comps(t.shape.level());
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (t.entries[i] > m) continue;
        auto& p = comps[nodes[i].comp - 1];
        if (static_cast<int>(p.size()) < nodes[i].row) p.resize(nodes[i].row, 0);
        p[nodes[i].row - 1]++;
    }
    for (auto& p : comps)
        while (!p.empty() && p.back() == 0) p.pop_back();
    return Multipartition(comps);
}

// degree by walking the tableau one entry at a time
inline int degree_by_recursion(const Tableau& t, QuantumChar e, const Multicharge& k) {
    int total = 0;
    auto nodes = t.shape.nodes();
    for (int m = 1; m <= t.size(); ++m) {
        Multipartition sh = shape_of_first(t, m);
        Node N{};
        for (size_t i = 0; i < nodes.size(); ++i)
            if (t.entries[i] == m) N = nodes[i];
        int i_res = res_of(N.comp, N.row, N.col, e, k);
        auto [add, rem] = scan_addable_removable(sh, e, k);
        for (const auto& [x, r] : add)
            if (r == i_res && N < x) ++total;
        for (const auto& [x, r] : rem)
            if (r == i_res && N < x) --total;
    }
    return total;
}

inline bool standard_by_hand(const Multipartition& l, const std::vector<int>& entries) {
    auto nodes = l.nodes();
    std::map<Node, int> at;
    for (size_t i = 0; i < nodes.size(); ++i) at[nodes[i]] = entries[i];
    for (const auto& [nd, v] : at) {
        auto right = at.find(Node{nd.comp, nd.row, nd.col + 1});
        if (right != at.end() && right->second < v) return false;
        auto below = at.find(Node{nd.comp, nd.row + 1, nd.col});
        if (below != at.end() && below->second < v) return false;
    }
    return true;
}

inline std::vector<std::vector<int>> standard_by_permutations(const Multipartition& l) {
    std::vector<int> p(l.size());
    for (int i = 0; i < l.size(); ++i) p[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        if (standard_by_hand(l, p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// accessible top positions of string s by enumerating every path separately
inline std::set<int> accessible_by_paths(const StrandDiagram& d, int s) {
    // labels at every level, bottom-up
    int L = static_cast<int>(d.word.size());
    std::vector<std::vector<int>> lab(L + 1, std::vector<int>(d.n));
    for (int p = 0; p < d.n; ++p) lab[L][p] = p + 1;
    for (int j = L - 1; j >= 0; --j) {
        lab[j] = lab[j + 1];
        if (d.word[j] > 0) std::swap(lab[j][d.word[j] - 1], lab[j][d.word[j]]);
    }
    std::set<int> out;
    std::function<void(int, int)> walk = [&](int j, int pos) {
        if (j < 0) {
            out.insert(pos);
            return;
        }
        Letter l = d.word[j];
        if (l < 0 || (pos != l - 1 && pos != l)) {
            walk(j - 1, pos);
            return;
        }
        int other = pos == l - 1 ? l : l - 1;
        walk(j - 1, other);
        int a = lab[j + 1][l - 1], b = lab[j + 1][l];
        if (d.string_res[a - 1] == d.string_res[b - 1]) walk(j - 1, pos);
    };
    walk(L - 1, s - 1);
    return out;
}

// min cut by enumerating every vertex bipartition
inline int min_cut_by_enumeration(const ResidueGraph& g, const std::vector<int>& sources, const std::vector<int>& sinks) {
    int V = g.vertices;
    int best = 1 << 30;
    for (uint32_t X = 0; X < (1u << V); ++X) {
        int cut = 0;
        for (int s : sources)
            if (!(X >> s & 1)) ++cut;
        for (int t : sinks)
            if (X >> t & 1) ++cut;
        for (const auto& [a, b] : g.edges)
            if ((X >> a & 1) && !(X >> b & 1)) ++cut;
        best = std::min(best, cut);
    }
    return best;
}

inline Word random_word(std::mt19937_64& rng, int n, int max_len, int dot_weight = 4) {
    Word w;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int j = 0; j < len; ++j) {
        bool dot = n == 1 || rng() % dot_weight == 0;
        if (dot)
            w.push_back(static_cast<Letter>(-static_cast<int>(1 + rng() % n)));
        else
            w.push_back(static_cast<Letter>(1 + rng() % (n - 1)));
    }
    return w;
}

// apply random far commutations (exact identities)
inline void shuffle_commuting(Word& w, std::mt19937_64& rng, int passes) {
    auto commute = [](Letter a, Letter b) {
        if (a < 0 && b < 0) return true;
        if (a > 0 && b > 0) return std::abs(a - b) >= 2;
        Letter p = a > 0 ? a : b, s = a > 0 ? -b : -a;
        return s != p && s != p + 1;
    };
    for (int k = 0; k < passes && w.size() > 1; ++k) {
        size_t j = rng() % (w.size() - 1);
        if (commute(w[j], w[j + 1])) std::swap(w[j], w[j + 1]);
    }
}

// Straightening by a second strategy: resolve the topmost problem in the raw
// word (dot slides upward, quadratic at the first non-reduced prefix), and only
// fall back to a separate engine for reduced crossing words of non-standard
// tableaux.
template <class Ctx>
class DualStraightener {
public:
    using Vec = typename Engine<Ctx>::Vec;
    using T = typename Ctx::T;

    DualStraightener(Engine<Ctx>& E)
        : E_(E), F_(E.shape(), E.e(), E.kappa(), E.ctx()), ilam_(E.i_lambda()), e_(E.e()) {}

    Vec reduce(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        Vec v = compute(w);
        memo_.emplace(w, v);
        return v;
    }

    int delegated = 0;

private:
    Vec combo(std::initializer_list<std::pair<long, Word>> parts) {
        Vec acc;
        for (const auto& [c, w] : parts) acc = E_.add_vec(acc, reduce(w), E_.ctx().from_int(c));
        return acc;
    }

    static Word cat(std::initializer_list<Word> ws) {
        Word out;
        for (const auto& w : ws) out.insert(out.end(), w.begin(), w.end());
        return out;
    }

    Vec compute(const Word& w) {
        size_t j = 0;
        while (j < w.size() && w[j] > 0) ++j;
        if (j < w.size()) {
            if (j == 0) return {};
            Letter p = w[j - 1];
            int s = -w[j];
            Word pre(w.begin(), w.begin() + (j - 1)), post(w.begin() + j + 1, w.end());
            auto res = propagate_residues(ilam_, pre);
            bool delta = res[p - 1] == res[p];
            Word up = cat({pre, Word{static_cast<Letter>(-s), p}, post});
            if (s != p && s != p + 1) return reduce(up);
            if (s == p + 1) {
                Word moved = cat({pre, Word{static_cast<Letter>(-p), p}, post});
                return delta ? combo({{1, moved}, {1, cat({pre, post})}}) : reduce(moved);
            }
            Word moved = cat({pre, Word{static_cast<Letter>(-(p + 1)), p}, post});
            return delta ? combo({{1, moved}, {-1, cat({pre, post})}}) : reduce(moved);
        }
        int n = E_.n();
        for (size_t m = 1; m <= w.size(); ++m) {
            Word head(w.begin(), w.begin() + m);
            if (is_reduced(n, head)) continue;
            Word P(w.begin(), w.begin() + (m - 1));
            Letter r = w[m - 1];
            Word tail(w.begin() + m, w.end());
            std::vector<ErrorTerm> errs;
            Rewriter(e_, ilam_).bring_to_back(P, r, errs);
            P.pop_back();
            auto res = propagate_residues(ilam_, P);
            int i = res[r - 1], k = res[r];
            Letter yr = static_cast<Letter>(-r), yr1 = static_cast<Letter>(-(r + 1));
            Vec out;
            if (i == k) {
            } else if (e_.e == 2) {
                out = combo({{-1, cat({P, Word{yr, yr}, tail})},
                             {2, cat({P, Word{yr, yr1}, tail})},
                             {-1, cat({P, Word{yr1, yr1}, tail})}});
            } else if (e_.reduce(i) == e_.reduce(k + 1)) {
                out = combo({{1, cat({P, Word{yr1}, tail})}, {-1, cat({P, Word{yr}, tail})}});
            } else if (e_.reduce(i) == e_.reduce(k - 1)) {
                out = combo({{1, cat({P, Word{yr}, tail})}, {-1, cat({P, Word{yr1}, tail})}});
            } else {
                out = reduce(cat({P, tail}));
            }
            for (const auto& er : errs)
                out = E_.add_vec(out, reduce(cat({er.word, Word{r}, tail})), E_.ctx().from_int(er.coef));
            return out;
        }
        Tableau G = Tableau::initial(E_.shape());
        for (Letter l : w) G = swap_values(G, l);
        if (G.is_standard()) {
            Word target = canonical_reduced_word(G).word;
            Vec out = E_.basis(E_.id(G));
            if (w == target) return out;
            Word cur = w;
            std::vector<ErrorTerm> errs;
            Rewriter(e_, ilam_).transform(cur, target, errs);
            for (const auto& er : errs) out = E_.add_vec(out, reduce(er.word), E_.ctx().from_int(er.coef));
            return out;
        }
        ++delegated;
        Vec out;
        for (const auto& [i, c] : F_.fold(w)) out.emplace_back(E_.id(F_.tableau(i)), c);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    Engine<Ctx>& E_;
    Engine<Ctx> F_;
    std::vector<int> ilam_;
    QuantumChar e_;
    std::map<Word, Vec> memo_;
};

template <class Ctx>
bool same_vec(Engine<Ctx>& E, const typename Engine<Ctx>::Vec& a, const typename Engine<Ctx>::Vec& b) {
    return E.add_vec(a, b, E.ctx().neg(E.ctx().one())).empty();
}

// Quadratic, dot-slide, braid and commutation relations as operator identities
// applied to v; returns the number of failed identities.
template <class Ctx>
int operator_identity_failures(Engine<Ctx>& E, const typename Engine<Ctx>::Vec& v, std::vector<std::string>* log = nullptr) {
    using Vec = typename Engine<Ctx>::Vec;
    const Ctx& k = E.ctx();
    const int n = E.n();
    const QuantumChar e = E.e();
    int bad = 0;
    auto L = [](int x) { return static_cast<Letter>(x); };
    auto ys = [&](const Vec& x, std::initializer_list<int> ss) {
        Vec c = x;
        for (int s : ss) c = E.act(c, L(-s));
        return c;
    };
    auto fail = [&](const std::string& what) {
        ++bad;
        if (log) log->push_back(what);
    };
    auto sub = [&](const Vec& a, const Vec& b) { return E.add_vec(a, b, k.neg(k.one())); };
    // split v by residue sequence so each relation sees a single idempotent
    std::map<std::vector<int>, Vec> parts;
    for (const auto& [i, c] : v) parts[E.residues(i)].emplace_back(i, c);
    for (const auto& [res, b] : parts) {
        for (int r = 1; r < n; ++r) {
            int i = res[r - 1], j = res[r];
            Vec lhs = E.act(E.act(b, L(r)), L(r));
            Vec rhs;
            if (i == j) {
            } else if (e.e == 2) {
                rhs = E.add_vec(E.add_vec(E.scale(ys(b, {r, r}), k.neg(k.one())), ys(b, {r, r + 1}), k.from_int(2)),
                                ys(b, {r + 1, r + 1}), k.neg(k.one()));
            } else if (e.reduce(i) == e.reduce(j + 1)) {
                rhs = sub(ys(b, {r + 1}), ys(b, {r}));
            } else if (e.reduce(i) == e.reduce(j - 1)) {
                rhs = sub(ys(b, {r}), ys(b, {r + 1}));
            } else {
                rhs = b;
            }
            if (!same_vec(E, lhs, rhs)) fail("quadratic r=" + std::to_string(r));
            // dot slides
            Vec l2 = E.act(E.act(b, L(r)), L(-r));
            Vec r2 = E.act(ys(b, {r + 1}), L(r));
            if (i == j) r2 = sub(r2, b);
            if (!same_vec(E, l2, r2)) fail("dot slide y_r r=" + std::to_string(r));
            Vec l3 = E.act(E.act(b, L(r)), L(-(r + 1)));
            Vec r3 = E.act(ys(b, {r}), L(r));
            if (i == j) r3 = E.add_vec(r3, b, k.one());
            if (!same_vec(E, l3, r3)) fail("dot slide y_r+1 r=" + std::to_string(r));
            if (r + 1 < n) {
                int kk = res[r + 1];
                Vec lb = E.act(E.act(E.act(b, L(r)), L(r + 1)), L(r));
                Vec rb = E.act(E.act(E.act(b, L(r + 1)), L(r)), L(r + 1));
                if (i == kk) {
                    if (e.e == 2) {
                        if (j != i) {
                            rb = E.add_vec(rb, ys(b, {r}), k.one());
                            rb = E.add_vec(rb, ys(b, {r + 1}), k.from_int(-2));
                            rb = E.add_vec(rb, ys(b, {r + 2}), k.one());
                        }
                    } else if (e.reduce(j) == e.reduce(i - 1)) {
                        rb = E.add_vec(rb, b, k.one());
                    } else if (e.reduce(j) == e.reduce(i + 1)) {
                        rb = sub(rb, b);
                    }
                }
                if (!same_vec(E, lb, rb)) fail("braid r=" + std::to_string(r));
            }
            for (int s = 1; s <= n; ++s) {
                if (s == r || s == r + 1) continue;
                if (!same_vec(E, E.act(E.act(b, L(r)), L(-s)), E.act(ys(b, {s}), L(r))))
                    fail("psi/dot commute r=" + std::to_string(r));
            }
            for (int s = r + 2; s < n; ++s)
                if (!same_vec(E, E.act(E.act(b, L(r)), L(s)), E.act(E.act(b, L(s)), L(r))))
                    fail("psi commute r=" + std::to_string(r));
        }
        for (int s = 1; s <= n; ++s)
            for (int u = s + 1; u <= n; ++u)
                if (!same_vec(E, ys(b, {s, u}), ys(b, {u, s}))) fail("dots commute");
    }
    return bad;
}

// Phi_{r^a}(x) = sum_{k<r} x^{k r^{a-1}}
inline ZPoly prime_power_cyclotomic(int r, int a) {
    int step = 1;
    for (int i = 1; i < a; ++i) step *= r;
    ZPoly p(step * (r - 1) + 1, 0);
    for (int k = 0; k < r; ++k) p[k * step] = 1;
    return p;
}

// x = (1 - zeta) q with q integral, solved as a rational linear system
inline bool divisible_by_one_minus_zeta(const ZPoly& x, int r, int a) {
    ZPoly phi = prime_power_cyclotomic(r, a);
    int D = static_cast<int>(phi.size()) - 1;
    auto reduce = [&](ZPoly v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= D; --i) {
            mpz_class c = v[i];
            if (c == 0) continue;
            for (int j = 0; j <= D; ++j) v[i - D + j] -= c * phi[j];
        }
        v.resize(D, 0);
        return v;
    };
    // columns: (1 - zeta) zeta^k
    std::vector<std::vector<mpq_class>> M(D, std::vector<mpq_class>(D + 1));
    for (int k = 0; k < D; ++k) {
        ZPoly col(k + 2, 0);
        col[k] = 1;
        col[k + 1] = -1;
        col = reduce(col);
        for (int i = 0; i < D; ++i) M[i][k] = col[i];
    }
    ZPoly xr = reduce(x);
    for (int i = 0; i < D; ++i) M[i][D] = xr[i];
    for (int c = 0, row = 0; c < D; ++c) {
        int piv = -1;
        for (int i = row; i < D; ++i)
            if (M[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return false;  // singular; cannot happen for 1 - zeta != 0
        std::swap(M[piv], M[row]);
        for (int i = 0; i < D; ++i) {
            if (i == row || M[i][c] == 0) continue;
            mpq_class f = M[i][c] / M[row][c];
            for (int j = c; j <= D; ++j) M[i][j] -= f * M[row][j];
        }
        ++row;
    }
    for (int i = 0; i < D; ++i) {
        mpq_class q = M[i][D] / M[i][i];
        q.canonicalize();
        if (q.get_den() != 1) return false;
    }
    return true;
}

// the tableau t_{xi,rho} on the bipartition (rho, xi): xi gets 1..|xi|
// in row reading order, rho gets the rest in row reading order.
inline Tableau t_xi_rho(const Partition& rho, const Partition& xi) {
    Multipartition l({rho, xi});
    auto nodes = l.nodes();
    int g2 = 0;
    for (int x : xi) g2 += x;
    std::vector<int> ent(nodes.size());
    int next_rho = g2 + 1, next_xi = 1;
    for (size_t i = 0; i < nodes.size(); ++i) ent[i] = nodes[i].comp == 2 ? next_xi++ : next_rho++;
    return Tableau(l, ent);
}

// swap each xi entry with the entry at the same position of rho
inline Tableau apply_sigma(const Tableau& t) {
    Tableau out = t;
    auto nodes = t.shape.nodes();
    std::map<Node, size_t> idx;
    for (size_t i = 0; i < nodes.size(); ++i) idx[nodes[i]] = i;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].comp != 2) continue;
        size_t j = idx.at(Node{1, nodes[i].row, nodes[i].col});
        std::swap(out.entries[i], out.entries[j]);
    }
    return out;
}

}  // namespace oracle
