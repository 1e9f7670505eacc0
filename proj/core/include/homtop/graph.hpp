#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homtop/errors.hpp"

namespace homtop {

// Finite undirected graph, loops allowed, multiple edges not. The adjacency
// relation is kept symmetric by construction. Immutable once built; all
// operations below are pure, so graphs can be shared across threads freely.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v); // symmetric; u == v adds a loop

    bool has_loop(int v) const { return adjacent(v, v); }
    bool has_any_loop() const;
    bool is_loopfree() const { return !has_any_loop(); }
    int degree(int v) const;
    std::size_t edge_count() const; // unordered pairs; a loop counts once

    // Neighborhood as a 64-bit mask; requires vertex_count() <= 64.
    std::uint64_t neighbors64(int v) const;

    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s) { labels_[v] = std::move(s); }

    bool same_structure(const Graph& other) const; // exact equality, labels ignored

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_; // row-major packed adjacency
    std::vector<std::string> labels_;
};

// Vertex map between two graphs; validity is checked by is_homomorphism.
struct GraphHom {
    std::shared_ptr<const Graph> source;
    std::shared_ptr<const Graph> target;
    std::vector<int> map;

    GraphHom(std::shared_ptr<const Graph> src, std::shared_ptr<const Graph> tgt,
             std::vector<int> m);
};

bool is_homomorphism(const GraphHom& h);

// ---- named generators ------------------------------------------------------

Graph complete_graph(int n);
Graph cycle_graph(int m);  // m >= 3
Graph path_graph(int n);   // n >= 1 vertices, n-1 edges
Graph kneser_graph(int n, int k);        // n >= 2k >= 2; vertices are k-subsets in lex order
Graph stable_kneser_graph(int n, int k); // k-subsets with no cyclically adjacent elements
Graph circular_graph(int n, int k);      // vertices 0..n-1, edge iff k <= |x-y| <= n-k
Graph looped_vertex();                   // single vertex with a loop

// Parses "complete:4", "cycle:7", "path:5", "kneser:5,2", "stable-kneser:6,2",
// "circular:8,3".
Graph make_named_graph(const std::string& spec);
bool looks_like_named_graph(const std::string& spec);

// ---- graph algebra ---------------------------------------------------------

Graph disjoint_union(const Graph& g, const Graph& h);   // h's vertices shifted after g's
Graph direct_product(const Graph& g, const Graph& h);   // pairs in row-major lex order
Graph strong_complement(const Graph& g);                // E = VxV minus E(G)
Graph apex_plus(const Graph& g);                        // apex (last index) joined to all, looped
Graph power_graph(const Graph& k, const Graph& h, std::size_t size_cap = 4096);

// ---- homomorphism search ---------------------------------------------------

struct HomEnumeration {
    std::vector<GraphHom> homs;
    bool truncated = false; // limit was reached
};

// Complete backtracking enumeration in lexicographic order of the map.
HomEnumeration enumerate_homs(const Graph& t, const Graph& g,
                              std::optional<std::size_t> limit = std::nullopt);

bool hom_exists(const Graph& t, const Graph& g);

struct ChromaticResult {
    enum class Kind { value, exceeds_cap, infinite } kind;
    int value = 0; // set when kind == value
};

ChromaticResult chromatic_number_exact(const Graph& g, int cap = 16);

// ---- folds -----------------------------------------------------------------

struct FoldTrace {
    // (folded vertex v, witness u with N(u) containing N(v)), in original ids,
    // in the order the folds were applied.
    std::vector<std::pair<int, int>> removed;
    Graph result;
    std::vector<int> survivor_map; // original vertex -> result index, -1 if folded
};

// Greedy fold reduction: repeatedly removes the smallest foldable vertex,
// witnessed by the smallest valid u, until no folds remain.
FoldTrace fold_reduce(const Graph& g);

// ---- winding numbers -------------------------------------------------------

// h must map a standard cycle C_m onto the standard K_3; counts signed
// wrap-arounds of the image walk.
int winding_number(const GraphHom& h);

// ---- rational chromatic search ---------------------------------------------

struct RationalWitness {
    int n, k;              // state graph parameters, ratio n/k
    std::vector<int> map;  // witness homomorphism into the state graph
};

enum class RationalKind { fractional, circular };

// Capped exhaustive search over state graphs; reports the best (minimum)
// ratio witnessed within the cap. This is an upper approximation of the
// infimum, never a claim of the exact value.
std::optional<RationalWitness> rational_chromatic_search(const Graph& g, RationalKind kind,
                                                         int cap);

// ---- misc ------------------------------------------------------------------

// Exact maximum clique size (branch and bound, loop on a vertex ignored).
int clique_number(const Graph& g);

bool is_automorphism(const Graph& g, const std::vector<int>& perm);
bool is_involution(const std::vector<int>& perm);

} // namespace homtop
