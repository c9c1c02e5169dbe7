#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"

namespace specht {

struct CartanData {
    QuantumChar e;

    explicit CartanData(QuantumChar q) : e(q) {}
    int a(int i, int j) const {
        if (e.reduce(i) == e.reduce(j)) return 2;
        if (e.adjacent(i, j)) return e.e == 2 ? -2 : -1;
        return 0;
    }
    // (Lambda(kappa), alpha_i)
    static int weight_multiplicity(const Multicharge& k, int i, QuantumChar e) {
        int m = 0;
        for (int x : k.kappa)
            if (e.reduce(x) == e.reduce(i)) ++m;
        return m;
    }
};

struct Generator {
    enum class Kind { psi, dot, idem };
    Kind kind = Kind::psi;
    int index = 1;           // r for psi, s for dot
    std::vector<int> iseq;   // idem only

    static Generator psi(int r) { return {Kind::psi, r, {}}; }
    static Generator dot(int s) { return {Kind::dot, s, {}}; }
    static Generator idem(std::vector<int> i) { return {Kind::idem, 0, std::move(i)}; }
    std::string str() const;
    bool operator==(const Generator&) const = default;
};

struct KlrWord {
    int n = 0;
    std::vector<Generator> gens;
    std::string str() const;
};

// letters: r > 0 is psi_r, -s is y_s; read top to bottom
using Letter = int16_t;
using Word = std::vector<Letter>;

struct ReducedWord {
    std::vector<int> perm;  // one-line, 1-based values
    Word word;
};

int generator_degree(const Generator& g, const std::vector<int>& iseq, QuantumChar e);
std::vector<int> propagate_residues(std::vector<int> iseq, const KlrWord& w);
std::vector<int> propagate_residues(std::vector<int> iseq, const Word& w);

std::vector<int> tableau_permutation(const Tableau& t);
int coxeter_length(const std::vector<int>& perm);
std::vector<int> word_permutation(int n, const Word& w);
bool is_reduced(int n, const Word& w);

// smallest r with r+1 placed before r in node order; 0 if t = t^lambda
int smallest_descent(const Tableau& t);
Tableau swap_values(const Tableau& t, int r);

ReducedWord canonical_reduced_word(const Tableau& t);
bool verify_321_convention(const Tableau& t, const Word& w, QuantumChar e, const Multicharge& k);

// reduced word taking tableau c to t by right multiplication, c <= t in weak order
Word reduced_word_between(const Tableau& c, const Tableau& t);

std::string render_word(const Word& w);
Word parse_word(const std::string& s);

struct ErrorTerm {
    long coef = 1;
    Word word;
};

// Braid-move rewriting of reduced crossing words. Maintains
// psi_{original} = psi_{current} + sum of error terms
// where residues at the top of the diagram are `top`.
class Rewriter {
public:
    Rewriter(QuantumChar e, std::vector<int> top) : e_(e), top_(std::move(top)) {}

    void move_up(Word& w, size_t j, size_t lo, std::vector<ErrorTerm>& errs) const;
    void move_down(Word& w, size_t k, size_t hi, std::vector<ErrorTerm>& errs) const;
    // make w equal to target (same permutation, both reduced)
    void transform(Word& w, const Word& target, std::vector<ErrorTerm>& errs) const;
    // crossing of strands at positions p, p+1 at level lo moved to index lo
    void bring_to_front(Word& w, size_t lo, int p, std::vector<ErrorTerm>& errs) const;
    // crossing of strands at bottom positions r, r+1 moved to the last index
    void bring_to_back(Word& w, int r, std::vector<ErrorTerm>& errs) const;

private:
    void braid(Word& w, size_t s, std::vector<ErrorTerm>& errs) const;
    std::vector<int> strands_at(const Word& w, size_t level) const;

    QuantumChar e_;
    std::vector<int> top_;
};

}  // namespace specht
