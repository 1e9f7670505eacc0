#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homtop/graph.hpp"
#include "homtop/sw.hpp"

namespace homtop {

// A test graph: a graph with an involution that flips at least one edge, so
// the induced action on every morphism complex into a loopfree graph is free.
struct TestGraphSpec {
    Graph t;
    std::vector<int> involution;
    std::string name; // canonical id, e.g. "complete:3" or "cycle:5+reflection"
};

// Parses "complete:n" (transposition of 0 and 1) or "cycle:m" (reflection
// i -> m-1-i). Validates the edge-flip condition.
TestGraphSpec make_test_spec(const std::string& spec);
TestGraphSpec make_test_spec(Graph t, std::vector<int> involution, std::string name);

struct Budgets {
    std::size_t cell_budget = kDefaultCellBudget;
    std::size_t bd_budget = kDefaultCellBudget;
};

// In-memory reference-height cache keyed by (test name, m); only named test
// graphs are cacheable. Optionally backed by a directory of JSON files.
class HeightCache {
public:
    HeightCache() = default;
    explicit HeightCache(std::string dir) : dir_(std::move(dir)) {}

    std::optional<int> get(const std::string& test_name, int m) const;
    void put(const std::string& test_name, int m, int h);

private:
    std::string dir_;
    mutable std::map<std::pair<std::string, int>, int> mem_;
};

struct BoundReport {
    std::string graph_name;
    std::string test_name;
    int h_g = -1;                            // height of Hom(T, G)
    std::vector<std::pair<int, int>> refs;   // (m, height of Hom(T, K_m))
    int bound = 1;
    std::string theorem;                     // citation tag
    int clique = 0;
    std::optional<int> chi_exact;
    bool capped = false;   // reference heights stopped at m_cap; bound may understate
    std::vector<std::string> partial_stages; // budget-exhausted stages, if any
};

// Lower bound on the chromatic number of G using heights of Hom(T, -):
// every m whose reference height stays below h(Hom(T,G)) certifies
// chi(G) >= m + 1. Budget failures downgrade to a weaker bound, never an
// unsound one.
BoundReport chrom_lower_bound(const TestGraphSpec& spec, const Graph& g,
                              const std::string& graph_name, int m_cap = 8,
                              const Budgets& budgets = {}, HeightCache* cache = nullptr,
                              bool with_chi = false, int chi_cap = 16);

// Complete-graph shortcut: chi(G) >= n + height(Hom(K_n, G)), with the
// transposition of vertices 0 and 1 as the involution.
BoundReport complete_graph_bound(int n, const Graph& g, const std::string& graph_name,
                                 const Budgets& budgets = {}, bool with_chi = false,
                                 int chi_cap = 16);

// Number of top-dimensional spheres in the wedge describing Hom(K_m, K_n);
// recurrence form. Zero when m > n.
long long f_oracle(int m, int n);
// Alternating binomial closed form of the same quantity.
long long f_closed_form(int m, int n);

// Exact clique-number baseline.
int clique_bound(const Graph& g);

} // namespace homtop
