#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/klr.hpp"

namespace specht {

// Diagram of v_{t^lambda} * word. Strings are labelled by their bottom
// position 1..n; top positions carry the nodes of lambda in node order.
struct StrandDiagram {
    Multipartition lambda;
    int n = 0;
    Word word;                  // top to bottom, dots allowed
    std::vector<Node> top;      // top[k] = k-th node
    std::vector<int> top_res;   // residue of top[k]
    std::vector<int> string_res;  // residue of string s at index s-1
    std::vector<int> reaches;     // top index reached by string s, at s-1

    struct Crossing {
        int level;      // index into word
        int lo, hi;     // strings, lo at the left just below the crossing
        bool same_residue;
    };
    std::vector<Crossing> crossings;  // bottom-up order
};

StrandDiagram make_diagram(const Multipartition& lambda, QuantumChar e, const Multicharge& kappa, Word word);

// reduced pure-crossing word of a standard tableau
bool is_standard_monomial(const StrandDiagram& d);

std::vector<Node> accessible_nodes(const StrandDiagram& d, int s);

struct ResidueGraph {
    int residue = 0;
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // upward, capacity 1 each
    std::vector<std::string> labels;
    std::vector<int> origin;  // vertex of string s (s-1), -1 if other residue
    std::vector<int> sink;    // vertex of top index k, -1 if other residue
};

ResidueGraph residue_graph(const StrandDiagram& d, int residue);
int max_flow(const ResidueGraph& g, const std::vector<int>& sources, const std::vector<int>& sinks);
std::string to_dot(const ResidueGraph& g);

// whether nodes lies in A(strings); strings must share one residue
bool accessible_set(const StrandDiagram& d, const std::vector<int>& strings, const std::vector<Node>& nodes);
// all members of A(strings), each sorted in node order
std::vector<std::vector<Node>> accessible_sets(const StrandDiagram& d, const std::vector<int>& strings);

enum class Stubbornness { stubborn, co_stubborn, both, neither };
enum class Immobility { yes, unknown };

struct StrandClass {
    Stubbornness kind = Stubbornness::neither;
    Immobility immobile = Immobility::unknown;
    std::vector<Node> accessible;
    Node reached{};
    // crossing criterion (same-residue crossers all smaller / all larger), standard monomials only
    std::optional<bool> criterion_stubborn, criterion_co_stubborn;
};

StrandClass classify_strand(const StrandDiagram& d, int s);
std::string to_string(Stubbornness k);

// set stubbornness: reached set minimal in A(strings) for the greatest-node order
bool is_stubborn_set(const StrandDiagram& d, const std::vector<int>& strings);
// true when R and its complement satisfy the separation hypotheses that force R
// to be strongly stubborn; nullopt when they do not apply
std::optional<bool> strongly_stubborn_certified(const StrandDiagram& d, const std::vector<int>& R);

}  // namespace specht
