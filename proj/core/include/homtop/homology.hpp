#pragma once

#include <vector>

#include "homtop/bitmatrix.hpp"
#include "homtop/complex.hpp"
#include "homtop/snf.hpp"

namespace homtop {

// Boundary matrices over GF(2), one per dimension; boundary[d] maps d-chains
// to (d-1)-chains. The composite of consecutive boundaries is checked to
// vanish at construction time.
struct ChainComplexGF2 {
    std::vector<std::size_t> counts;          // cells per dimension
    std::vector<SparseBitMatrix> boundary;    // boundary[d]: counts[d-1] x counts[d]; boundary[0] is 0 x counts[0]
};

ChainComplexGF2 chain_complex_gf2(const ProdComplex& x);
ChainComplexGF2 chain_complex_gf2(const SimplicialComplex& y);

// Unreduced Betti numbers over GF(2); entry d is the rank in dimension d.
using BettiVector = std::vector<std::size_t>;

BettiVector betti_gf2(const ChainComplexGF2& cc);
BettiVector betti_gf2(const ProdComplex& x);
BettiVector betti_gf2(const SimplicialComplex& y);

// Integer homology of a simplicial complex: free rank plus torsion
// coefficients per dimension, via Smith normal form of the signed boundary
// matrices (orientation from the sorted vertex order).
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<bigint> torsion; // each > 1, divisibility chain
};

std::vector<HomologyGroup> integer_homology(const SimplicialComplex& y);

long long euler_characteristic(const ProdComplex& x);
long long euler_characteristic(const SimplicialComplex& y);
long long euler_characteristic(const BettiVector& b);

} // namespace homtop
