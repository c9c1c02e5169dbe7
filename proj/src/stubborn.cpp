#include "specht/stubborn.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace specht {

StrandDiagram make_diagram(const Multipartition& lambda, QuantumChar e, const Multicharge& kappa, Word word) {
    StrandDiagram d;
    d.lambda = lambda;
    d.n = lambda.size();
    d.word = std::move(word);
    d.top = lambda.nodes();
    for (const auto& nd : d.top) d.top_res.push_back(residue(nd, e, kappa));
    for (Letter l : d.word) {
        if (l > 0 && l >= d.n) throw std::out_of_range("crossing index out of range");
        if (l < 0 && -l > d.n) throw std::out_of_range("dot index out of range");
    }
    // walk bottom-up; label[p] = string at position p (0-based)
    std::vector<int> label(d.n);
    for (int p = 0; p < d.n; ++p) label[p] = p + 1;
    std::vector<std::pair<int, int>> raw;
    for (int j = static_cast<int>(d.word.size()) - 1; j >= 0; --j) {
        Letter l = d.word[j];
        if (l < 0) continue;
        int r = l - 1;
        raw.emplace_back(j, r);
        d.crossings.push_back({j, label[r], label[r + 1], false});
        std::swap(label[r], label[r + 1]);
    }
    d.string_res.assign(d.n, 0);
    d.reaches.assign(d.n, 0);
    for (int k = 0; k < d.n; ++k) {
        d.string_res[label[k] - 1] = d.top_res[k];
        d.reaches[label[k] - 1] = k;
    }
    for (auto& c : d.crossings) c.same_residue = d.string_res[c.lo - 1] == d.string_res[c.hi - 1];
    return d;
}

bool is_standard_monomial(const StrandDiagram& d) {
    for (Letter l : d.word)
        if (l < 0) return false;
    if (!is_reduced(d.n, d.word)) return false;
    std::vector<int> entries(d.n);
    for (int s = 1; s <= d.n; ++s) entries[d.reaches[s - 1]] = s;
    return Tableau(d.lambda, entries).is_standard();
}

std::vector<Node> accessible_nodes(const StrandDiagram& d, int s) {
    if (s < 1 || s > d.n) throw std::out_of_range("string label out of range");
    std::vector<int> label(d.n);
    for (int p = 0; p < d.n; ++p) label[p] = p + 1;
    std::vector<char> in(d.n, 0);
    in[s - 1] = 1;
    for (int j = static_cast<int>(d.word.size()) - 1; j >= 0; --j) {
        Letter l = d.word[j];
        if (l < 0) continue;
        int r = l - 1;
        bool same = d.string_res[label[r] - 1] == d.string_res[label[r + 1] - 1];
        if (same) {
            if (in[r] || in[r + 1]) in[r] = in[r + 1] = 1;
        } else {
            std::swap(in[r], in[r + 1]);
        }
        std::swap(label[r], label[r + 1]);
    }
    std::vector<Node> out;
    for (int k = 0; k < d.n; ++k)
        if (in[k]) out.push_back(d.top[k]);
    return out;
}

ResidueGraph residue_graph(const StrandDiagram& d, int res) {
    ResidueGraph g;
    g.residue = res;
    g.origin.assign(d.n, -1);
    g.sink.assign(d.n, -1);
    auto vertex = [&](std::string lab) {
        g.labels.push_back(std::move(lab));
        return g.vertices++;
    };
    std::vector<int> label(d.n), cur(d.n, -1);
    for (int p = 0; p < d.n; ++p) {
        label[p] = p + 1;
        if (d.string_res[p] == res) cur[p] = g.origin[p] = vertex("s" + std::to_string(p + 1));
    }
    for (int j = static_cast<int>(d.word.size()) - 1; j >= 0; --j) {
        Letter l = d.word[j];
        if (l < 0) continue;
        int r = l - 1;
        if (cur[r] >= 0 && cur[r + 1] >= 0) {
            int x = vertex("x" + std::to_string(j) + "(" + std::to_string(label[r]) + "," + std::to_string(label[r + 1]) + ")");
            g.edges.emplace_back(cur[r], x);
            g.edges.emplace_back(cur[r + 1], x);
            cur[r] = cur[r + 1] = x;
        } else {
            std::swap(cur[r], cur[r + 1]);
        }
        std::swap(label[r], label[r + 1]);
    }
    for (int k = 0; k < d.n; ++k)
        if (cur[k] >= 0) {
            g.sink[k] = vertex(d.top[k].str());
            g.edges.emplace_back(cur[k], g.sink[k]);
        }
    return g;
}

int max_flow(const ResidueGraph& g, const std::vector<int>& sources, const std::vector<int>& sinks) {
    // residual network with super source and sink
    int S = g.vertices, T = g.vertices + 1, V = g.vertices + 2;
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> adj(V);
    auto arc = [&](int a, int b, int c) {
        adj[a].push_back({b, c, static_cast<int>(adj[b].size())});
        adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1});
    };
    for (const auto& [a, b] : g.edges) arc(a, b, 1);
    for (int s : sources) arc(S, s, 1);
    for (int t : sinks) arc(t, T, 1);
    int flow = 0;
    while (true) {
        std::vector<std::pair<int, int>> prev(V, {-1, -1});
        std::deque<int> q{S};
        prev[S] = {S, -1};
        while (!q.empty() && prev[T].first < 0) {
            int u = q.front();
            q.pop_front();
            for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
                const Arc& a = adj[u][i];
                if (a.cap > 0 && prev[a.to].first < 0) {
                    prev[a.to] = {u, i};
                    q.push_back(a.to);
                }
            }
        }
        if (prev[T].first < 0) break;
        for (int v = T; v != S; v = prev[v].first) {
            Arc& a = adj[prev[v].first][prev[v].second];
            a.cap -= 1;
            adj[v][a.rev].cap += 1;
        }
        ++flow;
    }
    return flow;
}

std::string to_dot(const ResidueGraph& g) {
    std::ostringstream os;
    os << "digraph residue_" << g.residue << " {\n  rankdir=BT;\n";
    for (int v = 0; v < g.vertices; ++v) os << "  v" << v << " [label=\"" << g.labels[v] << "\"];\n";
    for (const auto& [a, b] : g.edges) os << "  v" << a << " -> v" << b << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

int common_residue(const StrandDiagram& d, const std::vector<int>& strings) {
    if (strings.empty()) throw std::invalid_argument("empty string set");
    int res = -1;
    for (int s : strings) {
        if (s < 1 || s > d.n) throw std::out_of_range("string label out of range");
        if (res < 0) res = d.string_res[s - 1];
        if (d.string_res[s - 1] != res) throw std::invalid_argument("strings of mixed residues");
    }
    return res;
}

int top_index(const StrandDiagram& d, const Node& nd) {
    auto it = std::lower_bound(d.top.begin(), d.top.end(), nd);
    if (it == d.top.end() || !(*it == nd)) throw std::out_of_range("node not in diagram");
    return static_cast<int>(it - d.top.begin());
}

}  // namespace

bool accessible_set(const StrandDiagram& d, const std::vector<int>& strings, const std::vector<Node>& nodes) {
    int res = common_residue(d, strings);
    std::set<Node> uniq(nodes.begin(), nodes.end());
    if (uniq.size() != std::set<int>(strings.begin(), strings.end()).size()) return false;
    ResidueGraph g = residue_graph(d, res);
    std::vector<int> src, snk;
    for (int s : std::set<int>(strings.begin(), strings.end())) src.push_back(g.origin[s - 1]);
    for (const auto& nd : uniq) {
        int v = g.sink[top_index(d, nd)];
        if (v < 0) return false;
        snk.push_back(v);
    }
    return max_flow(g, src, snk) == static_cast<int>(src.size());
}

std::vector<std::vector<Node>> accessible_sets(const StrandDiagram& d, const std::vector<int>& strings) {
    int res = common_residue(d, strings);
    std::set<int> ss(strings.begin(), strings.end());
    int m = static_cast<int>(ss.size());
    std::vector<Node> cands;
    for (int k = 0; k < d.n; ++k)
        if (d.top_res[k] == res) cands.push_back(d.top[k]);
    std::vector<std::vector<Node>> out;
    std::vector<Node> pick;
    std::vector<int> sv(ss.begin(), ss.end());
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == m) {
            if (accessible_set(d, sv, pick)) out.push_back(pick);
            return;
        }
        for (size_t j = from; j < cands.size(); ++j) {
            pick.push_back(cands[j]);
            self(self, j + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::string to_string(Stubbornness k) {
    switch (k) {
        case Stubbornness::stubborn: return "stubborn";
        case Stubbornness::co_stubborn: return "co-stubborn";
        case Stubbornness::both: return "both";
        default: return "neither";
    }
}

StrandClass classify_strand(const StrandDiagram& d, int s) {
    StrandClass c;
    c.accessible = accessible_nodes(d, s);
    c.reached = d.top[d.reaches[s - 1]];
    bool st = c.reached == c.accessible.front();
    bool co = c.reached == c.accessible.back();
    c.kind = st && co ? Stubbornness::both : st ? Stubbornness::stubborn : co ? Stubbornness::co_stubborn
                                                                             : Stubbornness::neither;
    bool any_same = false;
    bool all_smaller = true, all_larger = true;
    for (const auto& x : d.crossings) {
        if (!x.same_residue || (x.lo != s && x.hi != s)) continue;
        any_same = true;
        int other = x.lo == s ? x.hi : x.lo;
        if (other > s) all_smaller = false;
        if (other < s) all_larger = false;
    }
    c.immobile = any_same ? Immobility::unknown : Immobility::yes;
    if (is_standard_monomial(d)) {
        c.criterion_stubborn = all_smaller;
        c.criterion_co_stubborn = all_larger;
    }
    return c;
}

bool is_stubborn_set(const StrandDiagram& d, const std::vector<int>& strings) {
    std::set<int> ss(strings.begin(), strings.end());
    int reached_max = -1;
    for (int s : ss) reached_max = std::max(reached_max, d.reaches[s - 1]);
    for (const auto& m : accessible_sets(d, strings))
        if (top_index(d, m.back()) < reached_max) return false;
    return true;
}

std::optional<bool> strongly_stubborn_certified(const StrandDiagram& d, const std::vector<int>& R) {
    if (!is_standard_monomial(d)) return std::nullopt;
    std::set<int> rs(R.begin(), R.end());
    for (const auto& x : d.crossings) {
        bool a = rs.count(x.lo), b = rs.count(x.hi);
        if (!a && !b) return std::nullopt;
        if (a != b) {
            int r = a ? x.lo : x.hi, l = a ? x.hi : x.lo;
            if (!(r > l)) return std::nullopt;
        }
    }
    return true;
}

}  // namespace specht
