#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>

#include "homtop/homology.hpp"

using namespace homtop;

namespace {

// minimal 6-vertex triangulation of the real projective plane
SimplicialComplex projective_plane() {
    SimplicialComplex y(6);
    std::vector<std::array<std::uint32_t, 3>> faces = {
        {0, 1, 3}, {0, 1, 5}, {0, 2, 3}, {0, 4, 5}, {0, 2, 4},
        {1, 2, 5}, {1, 2, 4}, {1, 3, 4}, {2, 3, 5}, {3, 4, 5},
    };
    for (auto& f : faces) {
        y.add_simplex(std::vector<std::uint32_t>{f[0], f[1], f[2]});
        y.add_simplex(std::vector<std::uint32_t>{f[0], f[1]});
        y.add_simplex(std::vector<std::uint32_t>{f[0], f[2]});
        y.add_simplex(std::vector<std::uint32_t>{f[1], f[2]});
        for (auto v : f) y.add_simplex(std::vector<std::uint32_t>{v});
    }
    y.seal();
    return y;
}

BettiVector betti_of_hom(const Graph& t, const Graph& g) { return betti_gf2(build_hom(t, g)); }

std::vector<std::size_t> convolve(const BettiVector& a, const BettiVector& b) {
    std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::size_t> trimmed(BettiVector b) {
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return b;
}

} // namespace

TEST_CASE("boundary matrices: hexagon edges have two endpoints") {
    auto cc = chain_complex_gf2(build_hom(complete_graph(2), complete_graph(3)));
    REQUIRE(cc.boundary.size() == 2);
    for (std::size_t j = 0; j < cc.boundary[1].cols(); ++j)
        CHECK(cc.boundary[1].column(j).size() == 2);
}

TEST_CASE("boundary of a square cell has four edges") {
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    std::vector<Eta> cells = {
        {1, 4}, {1, 8}, {2, 4}, {2, 8}, {3, 4}, {3, 8}, {1, 12}, {2, 12}, {3, 12},
    };
    auto x = ProdComplex::from_cells(ComplexKind::hom, complete_graph(2), g, cells);
    auto cc = chain_complex_gf2(x);
    REQUIRE(cc.counts[2] == 1);
    CHECK(cc.boundary[2].column(0).size() == 4);
}

TEST_CASE("betti: hexagon is a circle") {
    CHECK(trimmed(betti_of_hom(complete_graph(2), complete_graph(3))) ==
          std::vector<std::size_t>{1, 1});
}

TEST_CASE("betti: coloring complex of the 5-cycle is two circles") {
    auto b = betti_of_hom(cycle_graph(5), complete_graph(3));
    CHECK(trimmed(b) == std::vector<std::size_t>{2, 2});
}

TEST_CASE("betti: Hom(K3,K4) is a wedge of 13 circles") {
    auto b = betti_of_hom(complete_graph(3), complete_graph(4));
    CHECK(trimmed(b) == std::vector<std::size_t>{1, 13});
}

TEST_CASE("betti: Hom(C6,K3) has seven components") {
    auto b = betti_of_hom(cycle_graph(6), complete_graph(3));
    CHECK(b[0] == 7);
}

TEST_CASE("betti: spheres from edges into complete graphs") {
    for (int n = 3; n <= 5; ++n) {
        auto b = trimmed(betti_of_hom(complete_graph(2), complete_graph(n)));
        BettiVector sphere(n - 1, 0);
        sphere[0] = 1;
        sphere[n - 2] += 1;
        CHECK(b == sphere);
    }
}

TEST_CASE("betti: model agreement between cells and subdivision") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {complete_graph(2), complete_graph(4)},
        {cycle_graph(5), complete_graph(3)},
        {cycle_graph(4), complete_graph(3)},
    };
    for (const auto& [t, g] : pairs) {
        auto x = build_hom(t, g);
        CHECK(trimmed(betti_gf2(x)) == trimmed(betti_gf2(barycentric(x))));
    }
}

TEST_CASE("betti: coproduct convolution") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {complete_graph(2), complete_graph(2)},
        {complete_graph(2), cycle_graph(5)},
        {path_graph(2), path_graph(3)},
    };
    auto k = complete_graph(3);
    for (const auto& [g, h] : pairs) {
        auto joint = trimmed(betti_of_hom(disjoint_union(g, h), k));
        auto conv = convolve(betti_of_hom(g, k), betti_of_hom(h, k));
        CHECK(joint == conv);
    }
}

TEST_CASE("betti: fold invariance in both arguments") {
    auto l3 = path_graph(3);
    auto folded = fold_reduce(l3).result; // an edge
    auto k3 = complete_graph(3);
    CHECK(trimmed(betti_of_hom(l3, k3)) == trimmed(betti_of_hom(folded, k3)));

    auto c4 = cycle_graph(4);
    auto c4f = fold_reduce(c4).result;
    CHECK(trimmed(betti_of_hom(complete_graph(2), c4)) ==
          trimmed(betti_of_hom(complete_graph(2), c4f)));
}

TEST_CASE("betti: trees behave like an edge") {
    Graph tree(5);
    tree.add_edge(0, 1);
    tree.add_edge(1, 2);
    tree.add_edge(1, 3);
    tree.add_edge(3, 4);
    for (int n = 3; n <= 4; ++n) {
        auto b = trimmed(betti_of_hom(tree, complete_graph(n)));
        CHECK(b == trimmed(betti_of_hom(complete_graph(2), complete_graph(n))));
    }
}

TEST_CASE("betti: neighborhood complex agrees with the edge complex") {
    std::vector<Graph> graphs = {complete_graph(4), cycle_graph(5), kneser_graph(4, 2),
                                 path_graph(4)};
    for (const auto& g : graphs)
        CHECK(trimmed(betti_gf2(build_neighborhood(g))) ==
              trimmed(betti_of_hom(complete_graph(2), g)));
}

TEST_CASE("betti: independence complexes of cycles") {
    CHECK(trimmed(betti_gf2(build_independence(cycle_graph(5)))) ==
          std::vector<std::size_t>{1, 1});
    CHECK(trimmed(betti_gf2(build_independence(cycle_graph(6)))) ==
          std::vector<std::size_t>{1, 2});
}

TEST_CASE("betti: hom_plus join law for small cycles") {
    auto b4 = trimmed(betti_gf2(build_hom_plus(cycle_graph(4), complete_graph(2))));
    CHECK(b4 == std::vector<std::size_t>{1, 1});
    auto b6 = trimmed(betti_gf2(build_hom_plus(cycle_graph(6), complete_graph(2))));
    CHECK(b6 == std::vector<std::size_t>{1, 0, 0, 4});
}

TEST_CASE("euler characteristics") {
    auto hex = build_hom(complete_graph(2), complete_graph(3));
    CHECK(euler_characteristic(hex) == 0);
    auto oct = build_hom_plus(complete_graph(2), complete_graph(3));
    CHECK(euler_characteristic(oct) == 2);
    auto pts = build_hom(complete_graph(3), complete_graph(3));
    CHECK(euler_characteristic(pts) == 6);
    for (const ProdComplex* x : {&hex, &oct, &pts}) {
        CHECK(euler_characteristic(*x) == euler_characteristic(betti_gf2(*x)));
        CHECK(euler_characteristic(*x) == euler_characteristic(barycentric(*x)));
    }
}

TEST_CASE("integer homology: projective plane fixture") {
    auto y = projective_plane();
    REQUIRE(y.count(0) == 6);
    REQUIRE(y.count(1) == 15);
    REQUIRE(y.count(2) == 10);
    // closed surface: every edge lies in exactly two triangles
    auto cc = chain_complex_gf2(y);
    for (std::size_t e = 0; e < 15; ++e) {
        std::size_t cofaces = 0;
        for (std::size_t f = 0; f < 10; ++f)
            if (cc.boundary[2].get(e, f)) ++cofaces;
        CHECK(cofaces == 2);
    }

    auto h = integer_homology(y);
    REQUIRE(h.size() == 3);
    CHECK(h[0].free_rank == 1);
    CHECK(h[0].torsion.empty());
    CHECK(h[1].free_rank == 0);
    REQUIRE(h[1].torsion.size() == 1);
    CHECK(h[1].torsion[0] == 2);
    CHECK(h[2].free_rank == 0);
    CHECK(h[2].torsion.empty());
}

TEST_CASE("integer homology: subdivision of Hom(K2,K4) is a 2-sphere") {
    auto bd = barycentric(build_hom(complete_graph(2), complete_graph(4)));
    auto h = integer_homology(bd);
    REQUIRE(h.size() == 3);
    CHECK(h[0].free_rank == 1);
    CHECK(h[1].free_rank == 0);
    CHECK(h[1].torsion.empty());
    CHECK(h[2].free_rank == 1);
    CHECK(h[2].torsion.empty());
}

TEST_CASE("integer and gf2 euler characteristics agree") {
    auto bd = barycentric(build_hom(cycle_graph(5), complete_graph(3)));
    auto h = integer_homology(bd);
    long long chi_int = 0;
    for (std::size_t d = 0; d < h.size(); ++d)
        chi_int += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(h[d].free_rank);
    CHECK(chi_int == euler_characteristic(betti_gf2(bd)));
}
