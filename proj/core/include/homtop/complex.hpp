#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homtop/graph.hpp"

namespace homtop {

// A cell of a morphism complex: one vertex-set of G per vertex of T, packed
// as 64-bit masks. For kind `hom` every entry is nonempty; for `hom_plus`
// entries may be empty but not all of them.
using Eta = std::vector<std::uint64_t>;

enum class ComplexKind { hom, hom_plus };

// Morphism complex with explicit cells grouped by dimension; cells within a
// dimension are sorted lexicographically by their entry masks, so cell order
// is deterministic and lookups are binary searches. Immutable once built.
class ProdComplex {
public:
    ProdComplex(ComplexKind kind, Graph t, Graph g);

    ComplexKind kind() const { return kind_; }
    const Graph& source() const { return t_; }
    const Graph& target() const { return g_; }
    int positions() const { return tn_; }

    int dim() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t cell_count(int d) const {
        return d >= 0 && d <= dim() ? cells_[d].size() / tn_ : 0;
    }
    std::size_t total_cells() const;

    std::span<const std::uint64_t> cell(int d, std::size_t i) const {
        return {cells_[d].data() + i * tn_, static_cast<std::size_t>(tn_)};
    }
    // Index within dimension d, or -1 when absent.
    long long find_cell(int d, std::span<const std::uint64_t> eta) const;

    // Global ids are dimension-major; they serve as barycentric vertex ids.
    std::size_t global_id(int d, std::size_t i) const { return offset_[d] + i; }
    std::pair<int, std::size_t> from_global(std::size_t id) const;

    // Codimension-1 faces as indices into dimension d-1 (deterministic order).
    std::vector<std::uint32_t> faces(int d, std::size_t i) const;
    // All proper faces of a cell, as global ids.
    std::vector<std::size_t> all_proper_faces(int d, std::size_t i) const;

    int cell_dim(std::span<const std::uint64_t> eta) const;

    // Hand-built complexes for fixtures and tests. Cells are grouped and
    // sorted automatically; closure is the caller's responsibility.
    static ProdComplex from_cells(ComplexKind kind, Graph t, Graph g,
                                  const std::vector<Eta>& cells);

private:
    ComplexKind kind_;
    Graph t_, g_;
    int tn_ = 0;
    std::vector<std::vector<std::uint64_t>> cells_; // per dim, flat, stride tn_
    std::vector<std::size_t> offset_;

    void insert_sorted(std::vector<Eta>&& raw);
    friend ProdComplex build_hom(const Graph&, const Graph&, std::size_t);
    friend ProdComplex build_hom_plus(const Graph&, const Graph&, std::size_t);
};

constexpr std::size_t kDefaultCellBudget = 5'000'000;

// All eta with nonempty entries whose lists span complete bipartite subgraphs
// across every edge of T. Empty complex (no homomorphisms) is a legal result.
ProdComplex build_hom(const Graph& t, const Graph& g,
                      std::size_t budget = kDefaultCellBudget);

// Same with empty entries allowed (partial homomorphisms); the all-empty
// assignment is excluded. The result is a simplicial complex in cell form.
ProdComplex build_hom_plus(const Graph& t, const Graph& g,
                           std::size_t budget = kDefaultCellBudget);

// Simplicial complex with dense vertex ids 0..n-1; simplices are sorted
// vertex lists grouped by dimension, lexicographically ordered within each
// dimension. `payload` carries per-vertex provenance (cell global id for
// subdivisions, original vertex id otherwise).
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::size_t nverts) : nverts_(nverts) {}

    std::size_t vertex_count() const { return nverts_; }
    int dim() const { return static_cast<int>(simplices_.size()) - 1; }
    std::size_t count(int d) const {
        return d >= 0 && d <= dim() ? simplices_[d].size() / (d + 1) : 0;
    }
    std::size_t total() const;

    std::span<const std::uint32_t> simplex(int d, std::size_t i) const {
        return {simplices_[d].data() + i * (d + 1), static_cast<std::size_t>(d + 1)};
    }
    long long find(int d, std::span<const std::uint32_t> verts) const;

    void add_simplex(std::span<const std::uint32_t> verts); // buffered until seal()
    void seal();                                            // sort + dedupe

    const std::vector<std::uint64_t>& payload() const { return payload_; }
    void set_payload(std::vector<std::uint64_t> p) { payload_ = std::move(p); }

private:
    std::size_t nverts_ = 0;
    std::vector<std::vector<std::uint32_t>> simplices_;
    std::vector<std::uint64_t> payload_;
    bool sealed_ = true;
};

// Order complex of the face poset: vertices are cells (payload = global cell
// id), simplices are chains, listed with strictly increasing cell dimension.
SimplicialComplex barycentric(const ProdComplex& x,
                              std::size_t budget = kDefaultCellBudget);

// Chains strictly above the given 0-cell; payload holds global cell ids.
SimplicialComplex link_of_vertex(const ProdComplex& x, std::size_t vertex_index);

// Faces are the independent sets; a looped vertex is never independent.
SimplicialComplex build_independence(const Graph& g);

// Vertices are the non-isolated vertices; maximal faces are the neighbor sets.
SimplicialComplex build_neighborhood(const Graph& g);

// T-vertices whose list is nonempty (hom_plus cells).
std::vector<int> support(const ProdComplex& x, int d, std::size_t i);

// True when every candidate product cell whose whole 1-skeleton lies in X is
// itself a cell of X; a structural self-test for morphism complexes.
bool skeleton_determination_check(const ProdComplex& x);

} // namespace homtop
