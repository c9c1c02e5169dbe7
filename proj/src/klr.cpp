#include "specht/klr.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace specht {

std::string Generator::str() const {
    switch (kind) {
        case Kind::psi: return "p" + std::to_string(index);
        case Kind::dot: return "y" + std::to_string(index);
        default: {
            std::string s = "e(";
            for (size_t i = 0; i < iseq.size(); ++i) s += (i ? "," : "") + std::to_string(iseq[i]);
            return s + ")";
        }
    }
}

std::string KlrWord::str() const {
    std::string out;
    for (size_t i = 0; i < gens.size(); ++i) out += (i ? " " : "") + gens[i].str();
    return out;
}

int generator_degree(const Generator& g, const std::vector<int>& iseq, QuantumChar e) {
    switch (g.kind) {
        case Generator::Kind::idem: return 0;
        case Generator::Kind::dot: return 2;
        default:
            if (g.index < 1 || g.index >= static_cast<int>(iseq.size()))
                throw std::out_of_range("psi index out of range");
            return -CartanData(e).a(iseq[g.index - 1], iseq[g.index]);
    }
}

std::vector<int> propagate_residues(std::vector<int> iseq, const KlrWord& w) {
    for (const auto& g : w.gens)
        if (g.kind == Generator::Kind::psi) {
            if (g.index < 1 || g.index >= static_cast<int>(iseq.size()))
                throw std::out_of_range("psi index out of range");
            std::swap(iseq[g.index - 1], iseq[g.index]);
        }
    return iseq;
}

std::vector<int> propagate_residues(std::vector<int> iseq, const Word& w) {
    for (Letter l : w)
        if (l > 0) std::swap(iseq[l - 1], iseq[l]);
    return iseq;
}

std::vector<int> tableau_permutation(const Tableau& t) { return t.entries; }

int coxeter_length(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

// strand starting at top position p ends at bottom position perm[p]
std::vector<int> word_permutation(int n, const Word& w) {
    std::vector<int> at(n);  // position -> strand
    for (int i = 0; i < n; ++i) at[i] = i;
    for (Letter l : w)
        if (l > 0) std::swap(at[l - 1], at[l]);
    std::vector<int> perm(n);
    for (int p = 0; p < n; ++p) perm[at[p]] = p + 1;
    return perm;
}

bool is_reduced(int n, const Word& w) {
    int len = 0;
    for (Letter l : w)
        if (l > 0) ++len;
    return coxeter_length(word_permutation(n, w)) == len;
}

int smallest_descent(const Tableau& t) {
    int n = t.size();
    std::vector<int> pos(n + 2);
    for (int i = 0; i < n; ++i) pos[t.entries[i]] = i;
    for (int r = 1; r < n; ++r)
        if (pos[r] > pos[r + 1]) return r;
    return 0;
}

Tableau swap_values(const Tableau& t, int r) {
    Tableau out = t;
    for (auto& v : out.entries) {
        if (v == r)
            v = r + 1;
        else if (v == r + 1)
            v = r;
    }
    return out;
}

ReducedWord canonical_reduced_word(const Tableau& t) {
    ReducedWord out;
    out.perm = tableau_permutation(t);
    Tableau cur = t;
    for (int r = smallest_descent(cur); r != 0; r = smallest_descent(cur)) {
        out.word.push_back(static_cast<Letter>(r));
        cur = swap_values(cur, r);
    }
    std::reverse(out.word.begin(), out.word.end());
    return out;
}

bool verify_321_convention(const Tableau& t, const Word& w, QuantumChar e, const Multicharge& k) {
    int n = t.size();
    std::vector<int> at(n);
    for (int i = 0; i < n; ++i) at[i] = i;
    std::map<std::pair<int, int>, int> step;  // pair of bottom values -> step index
    for (size_t s = 0; s < w.size(); ++s) {
        if (w[s] <= 0) throw std::invalid_argument("verify_321_convention expects a pure crossing word");
        int a = at[w[s] - 1], b = at[w[s]];
        auto key = std::minmax(t.entries[a], t.entries[b]);
        if (!step.emplace(key, static_cast<int>(s)).second)
            throw std::invalid_argument("word is not reduced");
        std::swap(at[w[s] - 1], at[w[s]]);
    }
    for (int p = 0; p < n; ++p)
        if (t.entries[at[p]] != p + 1) throw std::invalid_argument("word does not realize the tableau");

    auto nodes = t.shape.nodes();
    std::vector<int> pos(n + 1), res(n + 1);
    for (int i = 0; i < n; ++i) {
        pos[t.entries[i]] = i;
        res[t.entries[i]] = residue(nodes[i], e, k);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (pos[i] <= pos[j]) continue;
            if (!e.adjacent(res[i], res[j])) continue;
            for (int l = j + 1; l <= n; ++l) {
                if (pos[j] <= pos[l] || res[l] != res[i]) continue;
                int sij = step.at({i, j}), sik = step.at({i, l}), sjk = step.at({j, l});
                if (!(sij > sik && sik > sjk)) return false;
            }
        }
    return true;
}

Word reduced_word_between(const Tableau& c, const Tableau& t) {
    int n = c.size();
    Word out;
    Tableau cur = c;
    while (cur.entries != t.entries) {
        std::vector<int> pos(n + 2);
        for (int i = 0; i < n; ++i) pos[cur.entries[i]] = i;
        int pick = 0;
        for (int r = 1; r < n && !pick; ++r)
            if (pos[r] < pos[r + 1] && t.entries[pos[r]] > t.entries[pos[r + 1]]) pick = r;
        if (!pick) throw std::logic_error("reduced_word_between: tableaux not comparable in weak order");
        out.push_back(static_cast<Letter>(pick));
        cur = swap_values(cur, pick);
    }
    return out;
}

std::string render_word(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += (w[i] > 0 ? "p" + std::to_string(w[i]) : "y" + std::to_string(-w[i]));
    }
    return out;
}

Word parse_word(const std::string& s) {
    std::istringstream in(s);
    std::string tok;
    Word out;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'p' && tok[0] != 'y')) throw std::invalid_argument("bad token " + tok);
        int v = 0;
        auto [end, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size() || v < 1) throw std::invalid_argument("bad index in " + tok);
        out.push_back(static_cast<Letter>(tok[0] == 'p' ? v : -v));
    }
    return out;
}

std::vector<int> Rewriter::strands_at(const Word& w, size_t level) const {
    std::vector<int> at(top_.size());
    for (size_t i = 0; i < at.size(); ++i) at[i] = static_cast<int>(i);
    for (size_t s = 0; s < level; ++s)
        if (w[s] > 0) std::swap(at[w[s] - 1], at[w[s]]);
    return at;
}

namespace {

// index in [from, to) where strands x and y cross, starting from arrangement `at` at level `from`
size_t find_crossing(const Word& w, std::vector<int> at, size_t from, size_t to, int x, int y) {
    for (size_t s = from; s < to; ++s) {
        int a = at[w[s] - 1], b = at[w[s]];
        if ((a == x && b == y) || (a == y && b == x)) return s;
        std::swap(at[w[s] - 1], at[w[s]]);
    }
    throw std::logic_error("rewriter: expected crossing not found");
}

}  // namespace

void Rewriter::braid(Word& w, size_t s, std::vector<ErrorTerm>& errs) const {
    int a = w[s], b = w[s + 1];
    if (w[s + 2] != a || std::abs(a - b) != 1) throw std::logic_error("rewriter: not a braid pattern");
    int m = std::min(a, b);
    Word prefix(w.begin(), w.begin() + s);
    auto lab = propagate_residues(top_, prefix);
    int i = lab[m - 1], j = lab[m], k = lab[m + 1];
    long kappa = a < b ? 1 : -1;
    auto emit = [&](long c, std::vector<Letter> mid) {
        ErrorTerm t;
        t.coef = c;
        t.word = prefix;
        t.word.insert(t.word.end(), mid.begin(), mid.end());
        t.word.insert(t.word.end(), w.begin() + s + 3, w.end());
        errs.push_back(std::move(t));
    };
    if (i == k) {
        if (e_.e == 2) {
            if (j != i) {
                emit(kappa, {static_cast<Letter>(-m)});
                emit(-2 * kappa, {static_cast<Letter>(-(m + 1))});
                emit(kappa, {static_cast<Letter>(-(m + 2))});
            }
        } else if (e_.reduce(j) == e_.reduce(i - 1)) {
            emit(kappa, {});
        } else if (e_.reduce(j) == e_.reduce(i + 1)) {
            emit(-kappa, {});
        }
    }
    w[s] = static_cast<Letter>(b);
    w[s + 1] = static_cast<Letter>(a);
    w[s + 2] = static_cast<Letter>(b);
}

void Rewriter::move_up(Word& w, size_t j, size_t lo, std::vector<ErrorTerm>& errs) const {
    while (j > lo) {
        int a = w[j - 1], b = w[j];
        if (std::abs(a - b) >= 2) {
            std::swap(w[j - 1], w[j]);
            --j;
            continue;
        }
        if (a == b) throw std::logic_error("rewriter: word is not reduced");
        int m = std::min(a, b);
        auto at = strands_at(w, j - 1);
        int P = at[m - 1], Q = at[m], R = at[m + 1];
        auto start = strands_at(w, lo);
        size_t k = (b == a + 1) ? find_crossing(w, start, lo, j - 1, Q, R) : find_crossing(w, start, lo, j - 1, P, Q);
        move_down(w, k, j - 2, errs);
        braid(w, j - 2, errs);
        j -= 2;
    }
}

void Rewriter::move_down(Word& w, size_t k, size_t hi, std::vector<ErrorTerm>& errs) const {
    while (k < hi) {
        int a = w[k], b = w[k + 1];
        if (std::abs(a - b) >= 2) {
            std::swap(w[k], w[k + 1]);
            ++k;
            continue;
        }
        if (a == b) throw std::logic_error("rewriter: word is not reduced");
        int m = std::min(a, b);
        auto at = strands_at(w, k);
        int P = at[m - 1], Q = at[m], R = at[m + 1];
        // arrangement after letters k, k+1
        auto after = at;
        std::swap(after[a - 1], after[a]);
        std::swap(after[b - 1], after[b]);
        size_t kp = (b == a + 1) ? find_crossing(w, after, k + 2, hi + 1, Q, R)
                                 : find_crossing(w, after, k + 2, hi + 1, P, Q);
        move_up(w, kp, k + 2, errs);
        braid(w, k, errs);
        k += 2;
    }
}

void Rewriter::bring_to_front(Word& w, size_t lo, int p, std::vector<ErrorTerm>& errs) const {
    auto at = strands_at(w, lo);
    size_t j = find_crossing(w, at, lo, w.size(), at[p - 1], at[p]);
    move_up(w, j, lo, errs);
}

void Rewriter::bring_to_back(Word& w, int r, std::vector<ErrorTerm>& errs) const {
    auto bottom = strands_at(w, w.size());
    size_t k = find_crossing(w, strands_at(w, 0), 0, w.size(), bottom[r - 1], bottom[r]);
    move_down(w, k, w.size() - 1, errs);
}

void Rewriter::transform(Word& w, const Word& target, std::vector<ErrorTerm>& errs) const {
    if (w.size() != target.size()) throw std::logic_error("rewriter: transform between words of different length");
    for (size_t idx = 0; idx < w.size(); ++idx) {
        if (w[idx] == target[idx]) continue;
        bring_to_front(w, idx, target[idx], errs);
        if (w[idx] != target[idx]) throw std::logic_error("rewriter: transform failed");
    }
}

}  // namespace specht
