#pragma once

#include <chrono>
#include <climits>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/field.hpp"
#include "specht/klr.hpp"

namespace specht {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Runs fn on a thread with a large stack; rethrows its exception.
void run_with_stack(const std::function<void()>& fn, size_t bytes = size_t(1) << 30);

// Integral Garnir element of the two-row belt with row lengths (k1, k2):
// the primitive vector of the permutation-type module annihilated by every
// dot and crossing, in the residue component of the block-swapped tableau.
struct GarnirBelt {
    int k1 = 0, k2 = 0;
    std::vector<Tableau> tableaux;
    std::vector<Word> words;
    std::vector<mpz_class> coeffs;
    int star = -1;
    int nullity = 0;
};
const GarnirBelt& garnir_belt(QuantumChar e, int k1, int k2);

template <class Ctx>
class Engine {
public:
    using T = typename Ctx::T;
    using Vec = std::vector<std::pair<int, T>>;

    Engine(Multipartition lambda, QuantumChar e, Multicharge kappa, Ctx ctx = Ctx(), bool garnir = true)
        : lambda_(std::move(lambda)), e_(e), kappa_(std::move(kappa)), ctx_(ctx), garnir_(garnir) {
        if (kappa_.level() != lambda_.level()) throw std::invalid_argument("multicharge length must equal level");
        n_ = lambda_.size();
        if (n_ > 120) throw std::invalid_argument("too many nodes for the engine");
        nodes_ = lambda_.nodes();
        ilam_ = initial_residues(lambda_, e_, kappa_);
        id(Tableau::initial(lambda_));
    }

    const Multipartition& shape() const { return lambda_; }
    QuantumChar e() const { return e_; }
    const Multicharge& kappa() const { return kappa_; }
    const Ctx& ctx() const { return ctx_; }
    int n() const { return n_; }
    const std::vector<int>& i_lambda() const { return ilam_; }
    size_t memo_size() const { return memo_.size(); }
    size_t tableau_count() const { return infos_.size(); }
    void set_deadline(std::chrono::steady_clock::time_point d) {
        deadline_ = d;
        has_deadline_ = true;
    }
    void clear_deadline() { has_deadline_ = false; }

    int id(const Tableau& t) {
        std::string key(t.entries.begin(), t.entries.end());
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        if (!(t.shape == lambda_)) throw std::invalid_argument("tableau shape does not match module");
        Info inf;
        inf.entries = t.entries;
        inf.pos.assign(n_ + 2, -1);
        for (int i = 0; i < n_; ++i) inf.pos[t.entries[i]] = i;
        int nid = static_cast<int>(infos_.size());
        infos_.push_back(std::move(inf));
        index_.emplace(std::move(key), nid);
        return nid;
    }
    Tableau tableau(int i) const { return Tableau(lambda_, infos_[i].entries); }
    const std::vector<int>& entries(int i) const { return infos_[i].entries; }

    const Word& word(int i) {
        Info& inf = infos_[i];
        if (!inf.word_ready) {
            inf.word = canonical_reduced_word(tableau(i)).word;
            inf.word_ready = true;
        }
        return inf.word;
    }
    std::vector<int> residues(int i) const {
        std::vector<int> r(n_);
        for (int p = 0; p < n_; ++p) r[infos_[i].entries[p] - 1] = ilam_[p];
        return r;
    }
    int degree_of(int i) {
        Info& inf = infos_[i];
        if (inf.deg == INT_MIN) inf.deg = degree(tableau(i), e_, kappa_);
        return inf.deg;
    }

    Vec basis(int i) const { return Vec{{i, ctx_.one()}}; }
    Vec generator() const { return basis(0); }

    Vec act(const Vec& v, const Generator& g) {
        switch (g.kind) {
            case Generator::Kind::psi:
                if (g.index < 1 || g.index >= n_) throw std::out_of_range("psi index out of range");
                return act(v, static_cast<Letter>(g.index));
            case Generator::Kind::dot:
                if (g.index < 1 || g.index > n_) throw std::out_of_range("dot index out of range");
                return act(v, static_cast<Letter>(-g.index));
            default: {
                if (static_cast<int>(g.iseq.size()) != n_) throw std::invalid_argument("idempotent length mismatch");
                Vec out;
                for (const auto& [i, c] : v)
                    if (residues(i) == g.iseq) out.emplace_back(i, c);
                return out;
            }
        }
    }

    Vec act(const Vec& v, Letter l) {
        Acc acc;
        for (const auto& [i, c] : v) {
            const Vec& r = act_basis(i, l);
            add(acc, c, r);
        }
        return finish(acc);
    }

    Vec apply(Vec v, const Word& w) {
        for (Letter l : w) {
            if (v.empty()) break;
            v = act(v, l);
        }
        return v;
    }
    Vec fold(const Word& w) { return apply(generator(), w); }

    Vec add_vec(const Vec& a, const Vec& b, const T& cb) const {
        Acc acc;
        add(acc, ctx_.one(), a);
        add(acc, cb, b);
        return finish(acc);
    }
    Vec scale(const Vec& a, const T& c) const {
        Acc acc;
        add(acc, c, a);
        return finish(acc);
    }

    // basis vectors sorted by tableau entries
    std::vector<std::pair<Tableau, T>> terms(const Vec& v) const {
        std::vector<std::pair<Tableau, T>> out;
        for (const auto& [i, c] : v) out.emplace_back(tableau(i), c);
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first.entries < b.first.entries; });
        return out;
    }

private:
    struct Info {
        std::vector<int> entries;
        std::vector<int> pos;
        bool word_ready = false;
        Word word;
        int deg = INT_MIN;
    };
    using Acc = std::map<int, T>;

    void add(Acc& acc, const T& c, const Vec& v) const {
        if (ctx_.is_zero(c)) return;
        for (const auto& [i, x] : v) {
            auto [it, fresh] = acc.emplace(i, ctx_.mul(c, x));
            if (!fresh) it->second = ctx_.add(it->second, ctx_.mul(c, x));
        }
    }
    Vec finish(const Acc& acc) const {
        Vec out;
        for (const auto& [i, c] : acc)
            if (!ctx_.is_zero(c)) out.emplace_back(i, c);
        return out;
    }

    int swapped(int i, int r) {
        Tableau t = tableau(i);
        return id(swap_values(t, r));
    }

    void check_budget() {
        if (!has_deadline_ || (++ticks_ & 1023)) return;
        if (std::chrono::steady_clock::now() > deadline_) throw BudgetExceeded("engine time budget exceeded");
    }

    const Vec& act_basis(int i, Letter l) {
        uint64_t key = uint64_t(i) * 512 + static_cast<uint64_t>(l + 256);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (!busy_.insert(key).second) throw std::logic_error("straightening recursion cycle");
        check_budget();
        Vec r;
        try {
            r = (l > 0) ? compute_psi(i, l) : compute_dot(i, -l);
        } catch (...) {
            busy_.erase(key);
            throw;
        }
        busy_.erase(key);
        return memo_.emplace(key, std::move(r)).first->second;
    }

    Vec fold_errors(const std::vector<ErrorTerm>& errs, const Word& tail = {}) {
        Acc acc;
        for (const auto& er : errs) {
            Word w = er.word;
            w.insert(w.end(), tail.begin(), tail.end());
            add(acc, ctx_.from_int(er.coef), fold(w));
        }
        return finish(acc);
    }

    // v_{t^lambda} psi_u for a reduced word u of the tableau tid
    Vec fold_reduced(Word u, int tid) {
        const Word& target = word(tid);
        if (u == target) return basis(tid);
        std::vector<ErrorTerm> errs;
        Rewriter(e_, ilam_).transform(u, target, errs);
        return add_vec(basis(tid), fold_errors(errs), ctx_.one());
    }

    Vec dots(const Vec& v, std::initializer_list<int> ss) {
        Vec cur = v;
        for (int s : ss) cur = act(cur, static_cast<Letter>(-s));
        return cur;
    }

    Vec quadratic(const Vec& base, int r, int i, int j) {
        if (i == j) return {};
        T one = ctx_.one();
        T mone = ctx_.neg(one);
        if (e_.e == 2) {
            // -(y_r - y_{r+1})^2
            Acc acc;
            add(acc, mone, dots(base, {r, r}));
            add(acc, ctx_.from_int(2), dots(base, {r, r + 1}));
            add(acc, mone, dots(base, {r + 1, r + 1}));
            return finish(acc);
        }
        if (e_.reduce(i) == e_.reduce(j + 1)) return add_vec(dots(base, {r + 1}), dots(base, {r}), mone);
        if (e_.reduce(i) == e_.reduce(j - 1)) return add_vec(dots(base, {r}), dots(base, {r + 1}), mone);
        return base;
    }

    Vec compute_psi(int i, int r) {
        const int pr = infos_[i].pos[r], pr1 = infos_[i].pos[r + 1];
        Rewriter rw(e_, ilam_);
        if (pr < pr1) {
            const Node& A = nodes_[pr];
            const Node& B = nodes_[pr1];
            if (A.comp == B.comp && A.row == B.row) {
                Word w = word(i);
                w.push_back(static_cast<Letter>(r));
                std::vector<ErrorTerm> errs;
                rw.bring_to_front(w, 0, pr + 1, errs);
                return fold_errors(errs);
            }
            if (A.comp == B.comp && A.col == B.col && B.row == A.row + 1) {
                if (!garnir_) throw std::logic_error("Garnir configuration in a module without column relations");
                return garnir_case(i, r);
            }
            int tid = swapped(i, r);
            Word w = word(i);
            w.push_back(static_cast<Letter>(r));
            return fold_reduced(std::move(w), tid);
        }
        int tid = swapped(i, r);
        auto res = residues(tid);
        int li = res[r - 1], lj = res[r];
        if (li == lj) {
            // quadratic vanishes; only braid corrections survive
            if (smallest_descent(tableau(i)) == r) return {};
            Word w = word(i);
            std::vector<ErrorTerm> errs;
            rw.bring_to_back(w, r, errs);
            return fold_errors(errs, Word{static_cast<Letter>(r)});
        }
        Vec base;
        std::vector<ErrorTerm> errs;
        if (smallest_descent(tableau(i)) == r) {
            base = basis(tid);
        } else {
            Word w = word(i);
            rw.bring_to_back(w, r, errs);
            w.pop_back();
            base = fold_reduced(std::move(w), tid);
        }
        Vec out = quadratic(base, r, li, lj);
        if (!errs.empty()) out = add_vec(out, fold_errors(errs, Word{static_cast<Letter>(r)}), ctx_.one());
        return out;
    }

    Vec compute_dot(int i, int s) {
        if (i == 0) return {};
        int r = smallest_descent(tableau(i));
        int parent = swapped(i, r);
        auto res = residues(parent);
        bool delta = res[r - 1] == res[r];
        Letter pr = static_cast<Letter>(r);
        if (s != r && s != r + 1) return act(act_basis(parent, static_cast<Letter>(-s)), pr);
        if (s == r) {
            Vec v = act(act_basis(parent, static_cast<Letter>(-(r + 1))), pr);
            return delta ? add_vec(v, basis(parent), ctx_.neg(ctx_.one())) : v;
        }
        Vec v = act(act_basis(parent, static_cast<Letter>(-r)), pr);
        return delta ? add_vec(v, basis(parent), ctx_.one()) : v;
    }

    Vec garnir_case(int i, int r) {
        const int a = infos_[i].pos[r];
        const Node& A = nodes_[a];
        int k1 = lambda_.row_len(A.comp, A.row) - A.col + 1;
        int k2 = A.col;
        const GarnirBelt& gb = garnir_belt(e_, k1, k2);
        auto shift = [&](const Word& w) {
            Word out;
            for (Letter l : w) out.push_back(static_cast<Letter>(l > 0 ? l + a : l - a));
            return out;
        };
        Word wstar = shift(gb.words[gb.star]);
        Tableau G = Tableau::initial(lambda_);
        for (Letter l : wstar) G = swap_values(G, l);
        Tableau target_t = swap_values(tableau(i), r);
        Word w2 = reduced_word_between(G, target_t);
        Word target = wstar;
        target.insert(target.end(), w2.begin(), w2.end());
        Word w = word(i);
        w.push_back(static_cast<Letter>(r));
        if (w.size() != target.size()) throw std::logic_error("Garnir rewrite: length mismatch");
        std::vector<ErrorTerm> errs;
        Rewriter(e_, ilam_).transform(w, target, errs);
        Acc acc;
        add(acc, ctx_.one(), fold_errors(errs));
        T cinv = ctx_.inv(ctx_.from_mpz(gb.coeffs[gb.star]));
        for (size_t s = 0; s < gb.words.size(); ++s) {
            if (static_cast<int>(s) == gb.star) continue;
            T c = ctx_.neg(ctx_.mul(cinv, ctx_.from_mpz(gb.coeffs[s])));
            if (ctx_.is_zero(c)) continue;
            Word ws = shift(gb.words[s]);
            ws.insert(ws.end(), w2.begin(), w2.end());
            add(acc, c, fold(ws));
        }
        return finish(acc);
    }

    Multipartition lambda_;
    QuantumChar e_;
    Multicharge kappa_;
    Ctx ctx_;
    bool garnir_ = true;
    int n_ = 0;
    std::vector<Node> nodes_;
    std::vector<int> ilam_;
    std::deque<Info> infos_;
    std::unordered_map<std::string, int> index_;
    std::unordered_map<uint64_t, Vec> memo_;
    std::unordered_set<uint64_t> busy_;
    bool has_deadline_ = false;
    std::chrono::steady_clock::time_point deadline_;
    uint64_t ticks_ = 0;
};

}  // namespace specht
