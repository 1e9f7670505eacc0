#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homtop/bitmatrix.hpp"
#include "homtop/complex.hpp"
#include "homtop/homology.hpp"

namespace homtop {

// Cellular involution on a morphism complex, induced by a pair of graph
// involutions acting entrywise on cells. Records whether the action is free.
struct Z2ActionOnComplex {
    std::vector<std::vector<std::uint32_t>> image; // per dim: cell index -> image index
    bool free = false;
    std::optional<std::pair<int, std::size_t>> fixed_cell; // a witness when not free
};

// image of eta under (gamma_t, gamma_g): new_eta(x) = gamma_g(eta(gamma_t(x))),
// using that both permutations are involutions.
Z2ActionOnComplex induced_action(const Graph& t, const Graph& g,
                                 const std::vector<int>& gamma_t,
                                 const std::vector<int>& gamma_g, const ProdComplex& x);

enum class ABRule {
    lex_smaller_to_a, // member with the smaller cell id labelled A (default)
    parity_flip       // orbits with even smaller-id get the opposite choice (for invariance tests)
};

// Quotient of the barycentric subdivision by a free involution. Generators of
// the quotient cochain complex are orbits of subdivision simplices, stored by
// a canonical representative chain (vertex ids in rank order).
class QuotientComplex {
public:
    std::size_t vertex_orbits() const { return n_qverts_; }
    int dim() const { return static_cast<int>(reps_.size()) - 1; }
    std::size_t count(int d) const {
        return d >= 0 && d <= dim() ? reps_[d].size() / (d + 1) : 0;
    }
    // representative chain of orbit i (subdivision vertex ids = cell ids)
    std::span<const std::uint32_t> rep(int d, std::size_t i) const {
        return {reps_[d].data() + i * (d + 1), static_cast<std::size_t>(d + 1)};
    }
    // A/B label per subdivision vertex (cell id); 0 = A, 1 = B
    bool label_b(std::size_t bd_vertex) const { return labels_[bd_vertex] != 0; }
    std::uint32_t vertex_orbit(std::size_t bd_vertex) const { return orbit_of_vertex_[bd_vertex]; }

    // coboundary matrix C^{k-1}(Q) -> C^k(Q), rows = k-orbits, cols = (k-1)-orbits
    const SparseBitMatrix& coboundary(int k) const;

    // Quotient as a plain simplicial complex (orbit chains mapped to vertex
    // orbits); valid for every complex in this artifact's range.
    SimplicialComplex as_simplicial() const;

private:
    std::size_t n_qverts_ = 0;
    std::vector<std::vector<std::uint32_t>> reps_;   // per dim, flat stride d+1
    std::vector<std::uint8_t> labels_;               // per subdivision vertex
    std::vector<std::uint32_t> orbit_of_vertex_;     // per subdivision vertex
    std::vector<SparseBitMatrix> cobnd_;             // cobnd_[k]: k >= 1
    friend QuotientComplex quotient_complex(const ProdComplex&, const Z2ActionOnComplex&,
                                            std::size_t, ABRule);
};

QuotientComplex quotient_complex(const ProdComplex& x, const Z2ActionOnComplex& a,
                                 std::size_t bd_budget = kDefaultCellBudget,
                                 ABRule rule = ABRule::lex_smaller_to_a);

// Representative cocycle of the k-th power of the degree-one class: the
// indicator of orbits whose chain labels alternate A/B, checked closed.
struct SWCertificate {
    int k = 0;
    BitVector cocycle;             // over quotient k-orbits
    enum class Verdict { nontrivial, trivial } verdict = Verdict::trivial;
    std::optional<BitVector> witness; // (k-1)-cochain with coboundary = cocycle
};

SWCertificate sw_power_cocycle(const QuotientComplex& q, int k);

// Height: the largest k whose power class does not vanish; -1 for the empty
// complex. Stops at the first trivial power (cup powers of a trivial class
// stay trivial) or at k_max.
struct HeightResult {
    int h = -1;
    int k_max = 0;
    bool free = false;
    std::vector<SWCertificate> certificates;
};

HeightResult height(const ProdComplex& x, const Z2ActionOnComplex& a, int k_max = -1,
                    std::size_t bd_budget = kDefaultCellBudget);

} // namespace homtop
