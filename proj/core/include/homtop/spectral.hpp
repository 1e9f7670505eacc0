#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "homtop/bitmatrix.hpp"
#include "homtop/bounds.hpp"
#include "homtop/complex.hpp"

namespace homtop {

// Rank tableau of one page of the support-filtration spectral sequence,
// everything over GF(2). Page 1 entries decompose over the induced subgraphs
// T[S] with |S| = p + 1.
struct Tableau {
    int page = 1;
    std::map<std::pair<int, int>, std::size_t> ranks; // (p, q) -> rank, zero entries omitted

    std::size_t rank(int p, int q) const {
        auto it = ranks.find({p, q});
        return it == ranks.end() ? 0 : it->second;
    }
    long long euler_sum() const;
};

// Page-1 data with explicit cocycle bases per subset, kept for the
// differential computation.
struct E1Summand {
    std::uint32_t subset = 0;                 // bit mask over V(T)
    SimplicialComplex bd;                     // subdivision of Hom(T[S], G)
    ProdComplex cells;                        // the complex itself
    std::vector<std::vector<BitVector>> cocycle_basis; // per q, over bd q-simplices
    std::vector<SparseBitMatrix> cobnd;       // cobnd[q]: C^{q-1} -> C^q of bd
};

struct E1Page {
    Graph t, g;
    Tableau tableau;
    bool has_bases = false;
    std::vector<E1Summand> summands; // ordered by subset mask value; empty without bases
    long long hom_plus_euler = 0;    // Euler characteristic of Hom_+(T, G)
};

// with_bases controls whether explicit cocycle bases (needed by d1_maps) are
// stored; the rank-only form is much cheaper on large complexes.
E1Page e1_tableau(const Graph& t, const Graph& g, const Budgets& budgets = {},
                  bool with_bases = true);

// Block matrices of the first differential per (p, q): the sum over
// one-element extensions of the restriction pullbacks, expressed in the
// stored bases.
struct D1Maps {
    std::map<std::pair<int, int>, SparseBitMatrix> blocks; // (p, q) -> E1^{p,q} -> E1^{p+1,q}
};

D1Maps d1_maps(const E1Page& e1);

Tableau e2_tableau(const E1Page& e1, const D1Maps& d1);

bool d1_squared_is_zero(const E1Page& e1, const D1Maps& d1);

// True when the zero pattern of the page rules out any later differential,
// so the page-2 ranks are final.
bool collapsed_by_sparsity(const Tableau& e2);

// Ranks per total degree p + q.
std::vector<std::size_t> total_degree_ranks(const Tableau& t);

} // namespace homtop
