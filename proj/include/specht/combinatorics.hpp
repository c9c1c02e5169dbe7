#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace specht {

// e = 0 encodes e = infinity.
struct QuantumChar {
    int e = 0;

    QuantumChar() = default;
    explicit QuantumChar(int v) : e(v) {
        if (v != 0 && v < 2) throw std::invalid_argument("quantum characteristic must be >= 2 or infinity");
    }
    static QuantumChar infinity() { return QuantumChar(); }
    static QuantumChar parse(const std::string& s);

    bool infinite() const { return e == 0; }
    int reduce(long long x) const {
        if (e == 0) return static_cast<int>(x);
        long long r = x % e;
        return static_cast<int>(r < 0 ? r + e : r);
    }
    bool adjacent(int i, int j) const { return reduce(i - j) == reduce(1) || reduce(j - i) == reduce(1); }
    std::string str() const { return e == 0 ? "inf" : std::to_string(e); }
    bool operator==(const QuantumChar&) const = default;
};

struct Multicharge {
    std::vector<int> kappa;

    Multicharge() = default;
    Multicharge(std::vector<int> k, QuantumChar e);
    static Multicharge parse(const std::string& s, QuantumChar e);
    int level() const { return static_cast<int>(kappa.size()); }
    std::string str() const;
    bool operator==(const Multicharge&) const = default;
};

struct Node {
    int comp = 1;
    int row = 1;
    int col = 1;
    auto operator<=>(const Node&) const = default;
    std::string str() const;
};

using Partition = std::vector<int>;

struct Multipartition {
    std::vector<Partition> comps;

    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> c);
    static Multipartition parse(const std::string& s);

    int level() const { return static_cast<int>(comps.size()); }
    int size() const;
    int row_len(int comp, int row) const;
    int col_len(int comp, int col) const;
    bool contains(const Node& n) const { return n.col >= 1 && n.col <= row_len(n.comp, n.row); }
    std::vector<Node> nodes() const;
    std::string str() const;
    bool operator==(const Multipartition&) const = default;
};

// Standard tableaux are stored by their entries listed in node order.
struct Tableau {
    Multipartition shape;
    std::vector<int> entries;

    Tableau() = default;
    Tableau(Multipartition s, std::vector<int> v) : shape(std::move(s)), entries(std::move(v)) {}
    static Tableau initial(const Multipartition& s);

    int size() const { return static_cast<int>(entries.size()); }
    int at(const Node& n) const;
    Node node_of(int value) const;
    bool is_standard() const;
    bool is_row_standard() const;
    Tableau restrict(int m) const;
    std::vector<int> residue_sequence(QuantumChar e, const Multicharge& k) const;
    std::string str() const;
    bool operator==(const Tableau&) const = default;
};

int residue(const Node& n, QuantumChar e, const Multicharge& k);
std::vector<int> initial_residues(const Multipartition& l, QuantumChar e, const Multicharge& k);

struct NodeRes {
    Node node;
    int res;
    bool operator==(const NodeRes&) const = default;
};

struct AddRem {
    std::vector<NodeRes> addable;
    std::vector<NodeRes> removable;
};

AddRem addable_removable(const Multipartition& l, QuantumChar e, const Multicharge& k);

// d_N: addable minus removable i-nodes strictly after N, for N removable in l.
int degree_step(const Multipartition& l, const Node& n, QuantumChar e, const Multicharge& k);
int degree(const Tableau& t, QuantumChar e, const Multicharge& k);

enum class Order { less, greater, equal, incomparable };
std::string to_string(Order o);

Order dominance(const Multipartition& x, const Multipartition& y);
Order tableau_dominance(const Tableau& s, const Tableau& t);

struct Shape {
    std::vector<Node> nodes;  // sorted

    Shape() = default;
    explicit Shape(std::vector<Node> n);
    int size() const { return static_cast<int>(nodes.size()); }
    bool contains(const Node& n) const;
    Node first() const { return nodes.front(); }
    Node last() const { return nodes.back(); }
    // rows of a straight or skew shape: (row, first col, last col)
    bool connected() const;
    bool straight() const;
    bool skew() const;
    Partition partition() const;  // straight shapes only
    Node top_left() const;         // straight shapes only
    std::string str() const;
    bool operator==(const Shape&) const = default;
};

struct ShapeFlags {
    bool straight = false;
    bool skew = false;
    bool removable = false;
    bool e_small = false;
};

bool is_removable(const Shape& s, const Multipartition& within);
bool is_e_small(const Shape& s, QuantumChar e, const Multicharge& k);
ShapeFlags shape_classify(const Shape& s, const Multipartition& within, QuantumChar e, const Multicharge& k);
bool is_subshape(const Shape& xi, const Shape& rho, QuantumChar e, const Multicharge& k);
bool precedes(const Shape& a, const Shape& b);  // every node of a is before every node of b
int rank(const Shape& s);
Shape straight_shape(const Partition& p, Node top_left);

struct HooksAndRims {
    std::vector<Shape> hooks;
    std::vector<Shape> rim_hooks;
    Shape largest_hook;
};
HooksAndRims hooks_and_rim_hooks(const Shape& s);

struct CpPair {
    Multipartition lambda, mu, nu;
    Shape mu_star, lambda_star;
    std::vector<Shape> chain;
    int a = 0, b = 0, c = 0, d = 0;
    int degree = 0;
    std::vector<std::string> notes;
};

struct NotAPair {
    std::string reason;
};

struct CpDetection {
    std::optional<CpPair> pair;
    NotAPair failure;
    bool ok() const { return pair.has_value(); }
};

CpDetection detect_cp_pair(const Multipartition& lambda, const Multipartition& mu, QuantumChar e,
                           const Multicharge& k);
std::vector<Shape> maximal_shape_chain(const Multipartition& nu, const Shape& mu_star, const Shape& lambda_star,
                                       QuantumChar e, const Multicharge& k);

// t^lambda_nu: t^lambda on [lambda], then n+1..n+gamma along mu* in node order.
Tableau extended_initial(const CpPair& p);
Tableau target_tableau_full(const CpPair& p);
Tableau target_tableau(const CpPair& p);

std::vector<Tableau> std_tableaux(const Multipartition& l);
std::vector<Tableau> std_tableaux_with(const Multipartition& l, QuantumChar e, const Multicharge& k,
                                       const std::vector<int>* residues, const int* degree);

std::vector<Partition> partitions_of(int n);
std::vector<Multipartition> multipartitions_of(int n, int level);

// All straight, removable, e-small shapes of nu.
std::vector<Shape> removable_straight_shapes(const Multipartition& nu, QuantumChar e, const Multicharge& k);
Multipartition remove_shape(const Multipartition& nu, const Shape& s);

// CP pairs of n by scanning all (lambda, mu); sorted by (lambda, mu)
std::vector<CpPair> cp_pairs(int n, QuantumChar e, const Multicharge& k);
// CP pairs with n + gamma <= max_total, built from pairs of shapes in each nu
std::vector<CpPair> cp_pairs_by_union(int max_total, QuantumChar e, const Multicharge& k);

std::string render_tableau(const Tableau& t);
std::string render_residues(const Multipartition& l, QuantumChar e, const Multicharge& k);

}  // namespace specht
