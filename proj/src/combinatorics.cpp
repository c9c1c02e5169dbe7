#include "specht/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace specht {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

Partition parse_partition(const std::string& s) {
    Partition p;
    if (s.empty() || s == "0" || s == "\xE2\x88\x85" || s == "-") return p;
    for (const auto& tok : split(s, ',')) {
        int v = parse_int(tok);
        if (v < 0) throw std::invalid_argument("negative part");
        if (v > 0) p.push_back(v);
    }
    return p;
}

}  // namespace

QuantumChar QuantumChar::parse(const std::string& s) {
    std::string t = strip(s);
    if (t == "inf" || t == "infinity" || t == "oo" || t == "0") return QuantumChar();
    return QuantumChar(parse_int(t));
}

Multicharge::Multicharge(std::vector<int> k, QuantumChar e) : kappa(std::move(k)) {
    if (kappa.empty()) throw std::invalid_argument("multicharge must have length >= 1");
    for (auto& x : kappa) x = e.reduce(x);
}

Multicharge Multicharge::parse(const std::string& s, QuantumChar e) {
    std::string t = strip(s);
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    std::vector<int> k;
    for (const auto& tok : split(t, ',')) k.push_back(parse_int(tok));
    return Multicharge(k, e);
}

std::string Multicharge::str() const {
    std::string out;
    for (size_t i = 0; i < kappa.size(); ++i) out += (i ? "," : "") + std::to_string(kappa[i]);
    return out;
}

std::string Node::str() const {
    return "(" + std::to_string(comp) + "," + std::to_string(row) + "," + std::to_string(col) + ")";
}

Multipartition::Multipartition(std::vector<Partition> c) : comps(std::move(c)) {
    if (comps.empty()) throw std::invalid_argument("multipartition needs at least one component");
    for (auto& p : comps) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] <= 0) throw std::invalid_argument("parts must be positive");
            if (i && p[i] > p[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
        }
    }
}

Multipartition Multipartition::parse(const std::string& s) {
    std::string t = strip(s);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        std::string inner = t.substr(1, t.size() - 2);
        if (inner.find('(') != std::string::npos) {
            // nested form ((3,2),(1))
            std::vector<Partition> comps;
            size_t i = 0;
            while (i < inner.size()) {
                if (inner[i] == '(') {
                    size_t j = inner.find(')', i);
                    if (j == std::string::npos) throw std::invalid_argument("unbalanced parentheses");
                    comps.push_back(parse_partition(inner.substr(i + 1, j - i - 1)));
                    i = j + 1;
                } else if (inner[i] == ',') {
                    ++i;
                } else if (inner.compare(i, 3, "\xE2\x88\x85") == 0) {
                    comps.emplace_back();
                    i += 3;
                } else {
                    throw std::invalid_argument("unexpected character in multipartition");
                }
            }
            return Multipartition(comps);
        }
        t = inner;
    }
    std::vector<Partition> comps;
    for (const auto& part : split(t, ';')) comps.push_back(parse_partition(part));
    return Multipartition(comps);
}

int Multipartition::size() const {
    int n = 0;
    for (const auto& p : comps) n += std::accumulate(p.begin(), p.end(), 0);
    return n;
}

int Multipartition::row_len(int comp, int row) const {
    if (comp < 1 || comp > level() || row < 1) return 0;
    const auto& p = comps[comp - 1];
    return row <= static_cast<int>(p.size()) ? p[row - 1] : 0;
}

int Multipartition::col_len(int comp, int col) const {
    if (comp < 1 || comp > level() || col < 1) return 0;
    int h = 0;
    for (int v : comps[comp - 1])
        if (v >= col) ++h;
    return h;
}

std::vector<Node> Multipartition::nodes() const {
    std::vector<Node> out;
    for (int m = 1; m <= level(); ++m)
        for (int r = 1; r <= static_cast<int>(comps[m - 1].size()); ++r)
            for (int c = 1; c <= comps[m - 1][r - 1]; ++c) out.push_back({m, r, c});
    return out;
}

std::string Multipartition::str() const {
    std::string out = "(";
    for (int m = 0; m < level(); ++m) {
        if (m) out += ";";
        for (size_t i = 0; i < comps[m].size(); ++i) out += (i ? "," : "") + std::to_string(comps[m][i]);
    }
    return out + ")";
}

namespace {

int node_index(const Multipartition& s, const Node& n) {
    if (!s.contains(n)) throw std::out_of_range("node not in shape: " + n.str());
    int idx = 0;
    for (int m = 1; m < n.comp; ++m)
        for (int v : s.comps[m - 1]) idx += v;
    for (int r = 1; r < n.row; ++r) idx += s.row_len(n.comp, r);
    return idx + n.col - 1;
}

}  // namespace

Tableau Tableau::initial(const Multipartition& s) {
    std::vector<int> v(s.size());
    std::iota(v.begin(), v.end(), 1);
    return Tableau(s, v);
}

int Tableau::at(const Node& n) const { return entries[node_index(shape, n)]; }

Node Tableau::node_of(int value) const {
    auto nodes = shape.nodes();
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i] == value) return nodes[i];
    throw std::out_of_range("value not in tableau");
}

bool Tableau::is_row_standard() const {
    auto nodes = shape.nodes();
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        const auto& a = nodes[i];
        const auto& b = nodes[i + 1];
        if (a.comp == b.comp && a.row == b.row && entries[i] > entries[i + 1]) return false;
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_row_standard()) return false;
    auto nodes = shape.nodes();
    for (size_t i = 0; i < nodes.size(); ++i) {
        Node below{nodes[i].comp, nodes[i].row + 1, nodes[i].col};
        if (shape.contains(below) && at(below) < entries[i]) return false;
    }
    std::vector<int> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Tableau Tableau::restrict(int m) const {
    auto nodes = shape.nodes();
    std::vector<Partition> comps(shape.level());
    std::vector<int> vals;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (entries[i] > m) continue;
        auto& p = comps[nodes[i].comp - 1];
        if (static_cast<int>(p.size()) < nodes[i].row) p.resize(nodes[i].row, 0);
        p[nodes[i].row - 1]++;
        vals.push_back(entries[i]);
    }
    return Tableau(Multipartition(comps), vals);
}

std::vector<int> Tableau::residue_sequence(QuantumChar e, const Multicharge& k) const {
    auto nodes = shape.nodes();
    std::vector<int> out(entries.size());
    for (size_t i = 0; i < nodes.size(); ++i) out[entries[i] - 1] = residue(nodes[i], e, k);
    return out;
}

std::string Tableau::str() const { return render_tableau(*this); }

int residue(const Node& n, QuantumChar e, const Multicharge& k) {
    if (n.comp < 1 || n.comp > k.level()) throw std::out_of_range("component index out of range");
    return e.reduce(static_cast<long long>(n.col) - n.row + k.kappa[n.comp - 1]);
}

std::vector<int> initial_residues(const Multipartition& l, QuantumChar e, const Multicharge& k) {
    std::vector<int> out;
    for (const auto& n : l.nodes()) out.push_back(residue(n, e, k));
    return out;
}

AddRem addable_removable(const Multipartition& l, QuantumChar e, const Multicharge& k) {
    AddRem out;
    for (int m = 1; m <= l.level(); ++m) {
        int rows = static_cast<int>(l.comps[m - 1].size());
        for (int r = 1; r <= rows + 1; ++r) {
            int len = l.row_len(m, r);
            if (r == 1 || l.row_len(m, r - 1) > len) {
                Node a{m, r, len + 1};
                out.addable.push_back({a, residue(a, e, k)});
            }
            if (len > 0 && l.row_len(m, r + 1) < len) {
                Node b{m, r, len};
                out.removable.push_back({b, residue(b, e, k)});
            }
        }
    }
    auto cmp = [](const NodeRes& a, const NodeRes& b) { return a.node < b.node; };
    std::sort(out.addable.begin(), out.addable.end(), cmp);
    std::sort(out.removable.begin(), out.removable.end(), cmp);
    return out;
}

int degree_step(const Multipartition& l, const Node& n, QuantumChar e, const Multicharge& k) {
    int i = residue(n, e, k);
    auto ar = addable_removable(l, e, k);
    int d = 0;
    for (const auto& a : ar.addable)
        if (a.res == i && n < a.node) ++d;
    for (const auto& r : ar.removable)
        if (r.res == i && n < r.node) --d;
    return d;
}

int degree(const Tableau& t, QuantumChar e, const Multicharge& k) {
    int n = t.size();
    auto nodes = t.shape.nodes();
    std::vector<Node> where(n + 1);
    for (size_t i = 0; i < nodes.size(); ++i) where[t.entries[i]] = nodes[i];
    std::vector<Partition> comps(t.shape.level());
    int deg = 0;
    for (int v = 1; v <= n; ++v) {
        const Node& nd = where[v];
        auto& p = comps[nd.comp - 1];
        if (static_cast<int>(p.size()) < nd.row) p.resize(nd.row, 0);
        p[nd.row - 1]++;
        if (p[nd.row - 1] != nd.col) throw std::invalid_argument("tableau is not standard");
        deg += degree_step(Multipartition(comps), nd, e, k);
    }
    return deg;
}

std::string to_string(Order o) {
    switch (o) {
        case Order::less: return "less";
        case Order::greater: return "greater";
        case Order::equal: return "equal";
        default: return "incomparable";
    }
}

namespace {

std::vector<int> partial_sums(const Multipartition& x, int rows) {
    std::vector<int> out;
    int acc = 0;
    for (int m = 1; m <= x.level(); ++m)
        for (int r = 1; r <= rows; ++r) {
            acc += x.row_len(m, r);
            out.push_back(acc);
        }
    return out;
}

Order compare_sums(const std::vector<int>& a, const std::vector<int>& b) {
    bool le = true, ge = true;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) le = false;
        if (a[i] < b[i]) ge = false;
    }
    if (le && ge) return Order::equal;
    if (le) return Order::less;
    if (ge) return Order::greater;
    return Order::incomparable;
}

}  // namespace

Order dominance(const Multipartition& x, const Multipartition& y) {
    if (x.level() != y.level()) throw std::invalid_argument("dominance: level mismatch");
    if (x.size() != y.size()) throw std::invalid_argument("dominance: size mismatch");
    int rows = 0;
    for (const auto* z : {&x, &y})
        for (const auto& p : z->comps) rows = std::max(rows, static_cast<int>(p.size()));
    return compare_sums(partial_sums(x, rows), partial_sums(y, rows));
}

Order tableau_dominance(const Tableau& s, const Tableau& t) {
    if (!(s.shape == t.shape)) throw std::invalid_argument("tableau_dominance: shape mismatch");
    bool le = true, ge = true;
    for (int m = 1; m <= s.size(); ++m) {
        Order o = dominance(s.restrict(m).shape, t.restrict(m).shape);
        if (o == Order::less) ge = false;
        if (o == Order::greater) le = false;
        if (o == Order::incomparable) le = ge = false;
    }
    if (le && ge) return Order::equal;
    if (ge) return Order::greater;
    if (le) return Order::less;
    return Order::incomparable;
}

Shape::Shape(std::vector<Node> n) : nodes(std::move(n)) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
}

bool Shape::contains(const Node& n) const { return std::binary_search(nodes.begin(), nodes.end(), n); }

bool Shape::connected() const {
    if (nodes.empty()) return false;
    std::vector<bool> seen(nodes.size(), false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        Node cur = nodes[stack.back()];
        stack.pop_back();
        const Node nb[4] = {{cur.comp, cur.row - 1, cur.col},
                            {cur.comp, cur.row + 1, cur.col},
                            {cur.comp, cur.row, cur.col - 1},
                            {cur.comp, cur.row, cur.col + 1}};
        for (const auto& x : nb) {
            auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
            if (it != nodes.end() && *it == x) {
                size_t j = it - nodes.begin();
                if (!seen[j]) {
                    seen[j] = true;
                    ++count;
                    stack.push_back(j);
                }
            }
        }
    }
    return count == nodes.size();
}

namespace {

struct RowSpan {
    int row, lo, hi;
};

// rows as contiguous spans; empty when some row is not contiguous or components differ
std::vector<RowSpan> row_spans(const Shape& s) {
    std::vector<RowSpan> out;
    if (s.nodes.empty()) return out;
    int comp = s.nodes.front().comp;
    for (const auto& n : s.nodes) {
        if (n.comp != comp) return {};
        if (!out.empty() && out.back().row == n.row) {
            if (n.col != out.back().hi + 1) return {};
            out.back().hi = n.col;
        } else {
            if (!out.empty() && n.row != out.back().row + 1) return {};
            out.push_back({n.row, n.col, n.col});
        }
    }
    return out;
}

}  // namespace

bool Shape::skew() const {
    auto spans = row_spans(*this);
    if (spans.empty()) return false;
    for (size_t i = 1; i < spans.size(); ++i) {
        if (spans[i].lo > spans[i - 1].lo || spans[i].hi > spans[i - 1].hi) return false;
        if (spans[i - 1].lo > spans[i].hi) return false;
    }
    return true;
}

bool Shape::straight() const {
    auto spans = row_spans(*this);
    if (spans.empty()) return false;
    for (size_t i = 1; i < spans.size(); ++i)
        if (spans[i].lo != spans[0].lo || spans[i].hi > spans[i - 1].hi) return false;
    return true;
}

Partition Shape::partition() const {
    if (!straight()) throw std::invalid_argument("shape is not straight");
    Partition p;
    for (const auto& sp : row_spans(*this)) p.push_back(sp.hi - sp.lo + 1);
    return p;
}

Node Shape::top_left() const {
    if (!straight()) throw std::invalid_argument("shape is not straight");
    return nodes.front();
}

std::string Shape::str() const {
    std::string out = "{";
    for (size_t i = 0; i < nodes.size(); ++i) out += (i ? "," : "") + nodes[i].str();
    return out + "}";
}

bool is_removable(const Shape& s, const Multipartition& within) {
    for (const auto& n : s.nodes)
        if (!within.contains(n)) return false;
    std::vector<Partition> rest = within.comps;
    for (int m = 1; m <= within.level(); ++m) {
        auto& p = rest[m - 1];
        for (int r = 1; r <= static_cast<int>(p.size()); ++r) {
            int keep = 0;
            bool gap = false;
            for (int c = 1; c <= within.row_len(m, r); ++c) {
                bool removed = s.contains({m, r, c});
                if (!removed) {
                    if (gap) return false;
                    ++keep;
                } else {
                    gap = true;
                }
            }
            p[r - 1] = keep;
        }
        for (size_t r = 1; r < p.size(); ++r)
            if (p[r] > p[r - 1]) return false;
    }
    return true;
}

bool is_e_small(const Shape& s, QuantumChar e, const Multicharge& k) {
    if (e.infinite()) return true;
    std::set<int> seen;
    for (const auto& n : s.nodes) seen.insert(residue(n, e, k));
    return static_cast<int>(seen.size()) < e.e;
}

ShapeFlags shape_classify(const Shape& s, const Multipartition& within, QuantumChar e, const Multicharge& k) {
    if (!s.connected()) throw std::invalid_argument("shape is not orthogonally connected");
    ShapeFlags f;
    f.straight = s.straight();
    f.skew = s.skew();
    f.removable = is_removable(s, within);
    f.e_small = is_e_small(s, e, k);
    return f;
}

bool is_subshape(const Shape& xi, const Shape& rho, QuantumChar e, const Multicharge& k) {
    if (!xi.straight() || !rho.straight()) throw std::invalid_argument("is_subshape needs straight shapes");
    auto p = xi.partition();
    auto q = rho.partition();
    if (p.size() > q.size()) return false;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > q[i]) return false;
    return residue(xi.top_left(), e, k) == residue(rho.top_left(), e, k);
}

bool precedes(const Shape& a, const Shape& b) { return a.last() < b.first(); }

int rank(const Shape& s) {
    Node tl = s.top_left();
    int r = 0;
    while (s.contains({tl.comp, tl.row + r, tl.col + r})) ++r;
    return r;
}

Shape straight_shape(const Partition& p, Node tl) {
    std::vector<Node> out;
    for (size_t i = 0; i < p.size(); ++i)
        for (int c = 0; c < p[i]; ++c) out.push_back({tl.comp, tl.row + static_cast<int>(i), tl.col + c});
    return Shape(out);
}

HooksAndRims hooks_and_rim_hooks(const Shape& s) {
    auto p = s.partition();
    Node tl = s.top_left();
    auto len = [&](int r) { return r >= 1 && r <= static_cast<int>(p.size()) ? p[r - 1] : 0; };
    auto height = [&](int c) {
        int h = 0;
        for (int v : p)
            if (v >= c) ++h;
        return h;
    };
    HooksAndRims out;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        for (int j = 1; j <= p[i - 1]; ++j) {
            std::vector<Node> hook, rim;
            for (int c = j; c <= len(i); ++c) hook.push_back({tl.comp, tl.row + i - 1, tl.col + c - 1});
            for (int r = i + 1; r <= height(j); ++r) hook.push_back({tl.comp, tl.row + r - 1, tl.col + j - 1});
            for (int r = i; r <= height(j); ++r)
                for (int c = j; c <= len(r); ++c)
                    if (c + 1 > len(r + 1)) rim.push_back({tl.comp, tl.row + r - 1, tl.col + c - 1});
            out.hooks.emplace_back(hook);
            out.rim_hooks.emplace_back(rim);
        }
    out.largest_hook = out.hooks.front();
    return out;
}

namespace {

std::vector<Partition> subpartitions(const Partition& p) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(size_t, int)> rec = [&](size_t i, int cap) {
        if (!cur.empty()) out.push_back(cur);
        if (i >= p.size()) return;
        for (int v = 1; v <= std::min(cap, p[i]); ++v) {
            cur.push_back(v);
            rec(i + 1, v);
            cur.pop_back();
        }
    };
    rec(0, p.empty() ? 0 : p[0]);
    return out;
}

bool congruent(const Shape& a, const Shape& b, QuantumChar e, const Multicharge& k) {
    if (a.size() != b.size() || a.nodes.empty()) return false;
    int dr = b.first().row - a.first().row;
    int dc = b.first().col - a.first().col;
    for (size_t i = 0; i < a.nodes.size(); ++i) {
        const Node& x = a.nodes[i];
        const Node& y = b.nodes[i];
        if (y.row - x.row != dr || y.col - x.col != dc) return false;
        if (residue(x, e, k) != residue(y, e, k)) return false;
    }
    return true;
}

Shape difference(const Multipartition& big, const Multipartition& small) {
    std::vector<Node> out;
    for (const auto& n : big.nodes())
        if (!small.contains(n)) out.push_back(n);
    return Shape(out);
}

int count_residue(const Shape& s, int res, QuantumChar e, const Multicharge& k) {
    int c = 0;
    for (const auto& n : s.nodes)
        if (residue(n, e, k) == res) ++c;
    return c;
}

}  // namespace

std::vector<Shape> maximal_shape_chain(const Multipartition& nu, const Shape& mu_star, const Shape& lambda_star,
                                       QuantumChar e, const Multicharge& k) {
    int res0 = residue(mu_star.top_left(), e, k);
    std::vector<Shape> cands;
    auto subs = subpartitions(mu_star.partition());
    for (const auto& tl : nu.nodes()) {
        if (residue(tl, e, k) != res0) continue;
        for (const auto& q : subs) {
            Shape s = straight_shape(q, tl);
            bool fits = true;
            for (const auto& n : s.nodes)
                if (!nu.contains(n)) fits = false;
            if (!fits) continue;
            if (!precedes(mu_star, s) || !precedes(s, lambda_star)) continue;
            if (!is_removable(s, nu) || !is_e_small(s, e, k)) continue;
            cands.push_back(s);
        }
    }
    cands.push_back(lambda_star);
    std::vector<Shape> maximal;
    for (size_t i = 0; i < cands.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < cands.size() && !dominated; ++j) {
            if (i == j || cands[j].size() <= cands[i].size()) continue;
            dominated = std::includes(cands[j].nodes.begin(), cands[j].nodes.end(), cands[i].nodes.begin(),
                                      cands[i].nodes.end());
        }
        if (!dominated) maximal.push_back(cands[i]);
    }
    std::sort(maximal.begin(), maximal.end(), [](const Shape& a, const Shape& b) { return a.first() < b.first(); });
    std::vector<Shape> chain{mu_star};
    chain.insert(chain.end(), maximal.begin(), maximal.end());
    return chain;
}

CpDetection detect_cp_pair(const Multipartition& lambda, const Multipartition& mu, QuantumChar e,
                           const Multicharge& k) {
    CpDetection out;
    auto fail = [&](const std::string& why) {
        out.failure.reason = why;
        return out;
    };
    if (lambda.level() != mu.level() || lambda.level() != k.level()) return fail("sizes: level mismatch");
    if (lambda.size() != mu.size()) return fail("sizes: |lambda| != |mu|");
    if (dominance(mu, lambda) != Order::greater) return fail("dominance: mu does not strictly dominate lambda");

    std::vector<Partition> comps(lambda.level());
    for (int m = 1; m <= lambda.level(); ++m) {
        size_t rows = std::max(lambda.comps[m - 1].size(), mu.comps[m - 1].size());
        for (size_t r = 1; r <= rows; ++r)
            comps[m - 1].push_back(std::max(lambda.row_len(m, r), mu.row_len(m, r)));
    }
    Multipartition nu(comps);
    Shape mu_star = difference(nu, lambda);
    Shape lambda_star = difference(nu, mu);
    if (mu_star.nodes.empty() || !mu_star.connected() || !lambda_star.connected())
        return fail("union shape: differences are not connected shapes");
    if (!congruent(mu_star, lambda_star, e, k)) return fail("congruence: shapes are not congruent");
    if (!is_removable(mu_star, nu) || !is_removable(lambda_star, nu)) return fail("removability");
    if (!mu_star.straight() || !lambda_star.straight()) return fail("straightness");
    if (!is_e_small(mu_star, e, k)) return fail("e-smallness");
    if (!precedes(mu_star, lambda_star)) return fail("ordering: mu* does not precede lambda*");

    CpPair p;
    p.lambda = lambda;
    p.mu = mu;
    p.nu = nu;
    p.mu_star = mu_star;
    p.lambda_star = lambda_star;
    p.chain = maximal_shape_chain(nu, mu_star, lambda_star, e, k);
    for (size_t j = 1; j < p.chain.size(); ++j)
        if (!precedes(p.chain[j - 1], p.chain[j])) return fail("chain: maximal shapes are not totally ordered");
    p.c = static_cast<int>(p.chain.size()) - 1;
    for (size_t j = 1; j < p.chain.size(); ++j) p.d += rank(p.chain[j]);

    Node lo = mu_star.last();
    Node hi = lambda_star.last();
    auto ar = addable_removable(nu, e, k);
    for (const auto& a : ar.addable)
        if (lo < a.node && a.node <= hi) p.a += count_residue(mu_star, a.res, e, k);
    for (const auto& r : ar.removable)
        if (lo < r.node && r.node <= hi) p.b += count_residue(mu_star, r.res, e, k);
    p.degree = p.a - p.b + 2 * p.d;
    out.pair = p;
    return out;
}

Tableau extended_initial(const CpPair& p) {
    int n = p.lambda.size();
    auto nodes = p.nu.nodes();
    std::vector<int> vals(nodes.size());
    int next_basic = 1;
    int next_extra = n + 1;
    for (size_t i = 0; i < nodes.size(); ++i)
        vals[i] = p.lambda.contains(nodes[i]) ? next_basic++ : next_extra++;
    return Tableau(p.nu, vals);
}

Tableau target_tableau_full(const CpPair& p) {
    Tableau base = extended_initial(p);
    Tableau cur = base;
    for (size_t j = 1; j < p.chain.size(); ++j) {
        const Shape& xi = p.chain[j];
        auto q = xi.partition();
        // nodes of mu* left after peeling removable nodes down to the partition q
        Shape sub = straight_shape(q, p.mu_star.top_left());
        std::map<int, int> swap;
        for (size_t i = 0; i < xi.nodes.size(); ++i) {
            int a = base.at(xi.nodes[i]);
            int b = base.at(sub.nodes[i]);
            swap[a] = b;
            swap[b] = a;
        }
        for (auto& v : cur.entries) {
            auto it = swap.find(v);
            if (it != swap.end()) v = it->second;
        }
    }
    return cur;
}

Tableau target_tableau(const CpPair& p) { return target_tableau_full(p).restrict(p.lambda.size()); }

std::vector<Tableau> std_tableaux_with(const Multipartition& l, QuantumChar e, const Multicharge& k,
                                       const std::vector<int>* residues, const int* deg) {
    int n = l.size();
    auto nodes = l.nodes();
    std::vector<int> vals(n, 0);
    std::vector<Partition> filled(l.level());
    for (int m = 0; m < l.level(); ++m) filled[m].assign(l.comps[m].size(), 0);
    std::vector<Tableau> out;
    std::vector<int> offset(l.level() + 1, 0);
    for (int m = 1; m <= l.level(); ++m) {
        offset[m] = offset[m - 1];
        for (int v : l.comps[m - 1]) offset[m] += v;
    }
    auto index_of = [&](int m, int r, int c) {
        int idx = offset[m - 1];
        for (int rr = 1; rr < r; ++rr) idx += l.row_len(m, rr);
        return idx + c - 1;
    };
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            Tableau t(l, vals);
            if (deg && degree(t, e, k) != *deg) return;
            out.push_back(std::move(t));
            return;
        }
        for (int m = 1; m <= l.level(); ++m) {
            auto& f = filled[m - 1];
            for (int r = 1; r <= static_cast<int>(f.size()); ++r) {
                int c = f[r - 1] + 1;
                if (c > l.row_len(m, r)) continue;
                if (r > 1 && f[r - 2] < c) continue;
                if (residues && (*residues)[v - 1] != residue({m, r, c}, e, k)) continue;
                f[r - 1]++;
                vals[index_of(m, r, c)] = v;
                rec(v + 1);
                f[r - 1]--;
            }
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) { return a.entries < b.entries; });
    return out;
}

std::vector<Tableau> std_tableaux(const Multipartition& l) {
    return std_tableaux_with(l, QuantumChar(), Multicharge(std::vector<int>(l.level(), 0), QuantumChar()),
                             nullptr, nullptr);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(left, cap); v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Multipartition> multipartitions_of(int n, int level) {
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int left, int m) {
        if (m == level) {
            if (left == 0) out.emplace_back(cur);
            return;
        }
        int lo = (m == level - 1) ? left : 0;
        for (int s = lo; s <= left; ++s)
            for (const auto& p : partitions_of(s)) {
                cur.push_back(p);
                rec(left - s, m + 1);
                cur.pop_back();
            }
    };
    rec(n, 0);
    return out;
}

std::vector<Shape> removable_straight_shapes(const Multipartition& nu, QuantumChar e, const Multicharge& k) {
    std::vector<Shape> out;
    for (int m = 1; m <= nu.level(); ++m) {
        int rows = static_cast<int>(nu.comps[m - 1].size());
        for (int r0 = 1; r0 <= rows; ++r0)
            for (int c0 = 1; c0 <= nu.row_len(m, r0); ++c0)
                for (int h = 1; r0 + h - 1 <= rows; ++h) {
                    if (nu.row_len(m, r0 + h - 1) < c0) break;
                    if (nu.row_len(m, r0 + h) > c0 - 1) continue;
                    Partition q;
                    for (int i = 0; i < h; ++i) q.push_back(nu.row_len(m, r0 + i) - c0 + 1);
                    Shape s = straight_shape(q, {m, r0, c0});
                    if (is_removable(s, nu) && is_e_small(s, e, k)) out.push_back(s);
                }
    }
    std::sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) {
        return a.first() < b.first() || (a.first() == b.first() && a.size() < b.size());
    });
    return out;
}

Multipartition remove_shape(const Multipartition& nu, const Shape& s) {
    std::vector<Partition> comps = nu.comps;
    for (const auto& nd : s.nodes) {
        if (!nu.contains(nd)) throw std::invalid_argument("remove_shape: node outside multipartition");
        comps[nd.comp - 1][nd.row - 1] -= 1;
    }
    for (auto& p : comps) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        if (!std::is_sorted(p.rbegin(), p.rend())) throw std::invalid_argument("remove_shape: shape not removable");
    }
    return Multipartition(comps);
}

namespace {

bool pair_less(const CpPair& a, const CpPair& b) {
    if (a.lambda.comps != b.lambda.comps) return a.lambda.comps < b.lambda.comps;
    return a.mu.comps < b.mu.comps;
}

}  // namespace

std::vector<CpPair> cp_pairs(int n, QuantumChar e, const Multicharge& k) {
    std::vector<CpPair> out;
    auto all = multipartitions_of(n, k.level());
    for (const auto& l : all)
        for (const auto& m : all) {
            auto det = detect_cp_pair(l, m, e, k);
            if (det.ok()) out.push_back(*det.pair);
        }
    std::sort(out.begin(), out.end(), pair_less);
    return out;
}

std::vector<CpPair> cp_pairs_by_union(int max_total, QuantumChar e, const Multicharge& k) {
    std::vector<CpPair> out;
    for (int total = 2; total <= max_total; ++total)
        for (const auto& nu : multipartitions_of(total, k.level())) {
            auto shapes = removable_straight_shapes(nu, e, k);
            for (const auto& s1 : shapes)
                for (const auto& s2 : shapes) {
                    if (s1.size() != s2.size() || !precedes(s1, s2)) continue;
                    auto det = detect_cp_pair(remove_shape(nu, s1), remove_shape(nu, s2), e, k);
                    if (det.ok() && det.pair->nu == nu) out.push_back(*det.pair);
                }
        }
    std::sort(out.begin(), out.end(), pair_less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CpPair& a, const CpPair& b) { return a.lambda == b.lambda && a.mu == b.mu; }),
              out.end());
    return out;
}

namespace {

std::string render_grid(const Multipartition& l, const std::vector<std::string>& cells) {
    auto nodes = l.nodes();
    std::string out;
    if (l.level() > 1) out += "(";
    size_t idx = 0;
    for (int m = 1; m <= l.level(); ++m) {
        if (m > 1) out += " | ";
        if (l.comps[m - 1].empty()) {
            out += "\xE2\x88\x85";
            continue;
        }
        for (int r = 1; r <= static_cast<int>(l.comps[m - 1].size()); ++r) {
            if (r > 1) out += " / ";
            for (int c = 1; c <= l.row_len(m, r); ++c) {
                if (c > 1) out += " ";
                out += cells[idx++];
            }
        }
    }
    if (l.level() > 1) out += ")";
    return out;
}

}  // namespace

std::string render_tableau(const Tableau& t) {
    std::vector<std::string> cells;
    for (int v : t.entries) cells.push_back(std::to_string(v));
    return render_grid(t.shape, cells);
}

std::string render_residues(const Multipartition& l, QuantumChar e, const Multicharge& k) {
    std::vector<std::string> cells;
    for (const auto& n : l.nodes()) cells.push_back(std::to_string(residue(n, e, k)));
    return render_grid(l, cells);
}

}  // namespace specht
