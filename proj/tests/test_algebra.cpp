#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <vector>

#include "homtop/bitmatrix.hpp"
#include "homtop/snf.hpp"

using namespace homtop;

namespace {

// deterministic generator for reproducible "random" matrices
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
};

// textbook dense elimination oracle
std::size_t dense_rank_gf2(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && !m[pivot][c]) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c])
                for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
        ++rank;
    }
    return rank;
}

SparseBitMatrix from_dense(const std::vector<std::vector<int>>& d) {
    SparseBitMatrix m(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t c = 0; c < d[r].size(); ++c)
            if (d[r][c]) m.add_entry(r, c);
    m.seal();
    return m;
}

std::vector<std::vector<int>> random_dense(Lcg& rng, std::size_t rows, std::size_t cols,
                                           int fill_percent) {
    std::vector<std::vector<int>> d(rows, std::vector<int>(cols, 0));
    for (auto& row : d)
        for (auto& x : row) x = (rng.next() % 100) < static_cast<std::uint64_t>(fill_percent);
    return d;
}

} // namespace

TEST_CASE("rank: identity and zero") {
    CHECK(rank_gf2(SparseBitMatrix::identity(5)) == 5);
    SparseBitMatrix z(7, 4);
    z.seal();
    CHECK(rank_gf2(z) == 0);
}

TEST_CASE("rank agrees with dense elimination on random matrices") {
    Lcg rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + rng.next() % 100, cols = 1 + rng.next() % 100;
        auto d = random_dense(rng, rows, cols, 10 + trial % 40);
        CHECK(rank_gf2(from_dense(d)) == dense_rank_gf2(d));
    }
}

TEST_CASE("rank of a matrix equals rank of its transpose") {
    Lcg rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        auto d = random_dense(rng, 1 + rng.next() % 60, 1 + rng.next() % 60, 25);
        auto m = from_dense(d);
        CHECK(rank_gf2(m) == rank_gf2(m.transpose()));
    }
}

TEST_CASE("solve: identity returns b, zero matrix inconsistent") {
    auto id = SparseBitMatrix::identity(6);
    BitVector b(6);
    b.set(1);
    b.set(4);
    auto x = solve_gf2(id, b);
    REQUIRE(x);
    CHECK(*x == b);

    SparseBitMatrix z(3, 5);
    z.seal();
    BitVector nonzero(3);
    nonzero.set(2);
    CHECK(!solve_gf2(z, nonzero));
    BitVector zero(3);
    auto x0 = solve_gf2(z, zero);
    REQUIRE(x0);
    CHECK(!x0->any());
}

TEST_CASE("solve recovers planted solutions and re-verifies") {
    Lcg rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto d = random_dense(rng, 20, 30, 20);
        auto m = from_dense(d);
        BitVector planted(30);
        for (int i = 0; i < 30; ++i)
            if (rng.next() & 1) planted.set(i);
        BitVector b = m.apply(planted);
        auto x = solve_gf2(m, b);
        REQUIRE(x);
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("solve dimension mismatch is a shape error") {
    auto id = SparseBitMatrix::identity(4);
    CHECK_THROWS_AS(solve_gf2(id, BitVector(5)), shape_error);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    Lcg rng(4242);
    auto d = random_dense(rng, 15, 25, 30);
    auto m = from_dense(d);
    auto ker = kernel_gf2(m);
    CHECK(ker.size() == 25 - rank_gf2(m));
    for (const auto& v : ker) CHECK(!m.apply(v).any());
}

TEST_CASE("snf: single entry and diagonal input") {
    IntSparseMatrix m(1, 1);
    m.add_entry(0, 0, 2);
    m.seal();
    auto f = smith_normal_form(m);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == 2);

    IntSparseMatrix d(3, 3);
    d.add_entry(0, 0, 1);
    d.add_entry(1, 1, 6);
    d.seal(); // third diagonal entry is zero
    auto g = smith_normal_form(d);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == 1);
    CHECK(g[1] == 6);
}

TEST_CASE("snf divisibility chain and determinant invariants on random matrices") {
    // oracle: gcd of all k x k minors equals d_1 * ... * d_k
    Lcg rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 6;
        std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<long long>(rng.next() % 7) - 3;

        IntSparseMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.add_entry(r, c, a[r][c]);
        m.seal();
        auto f = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);

        // brute-force minor gcds via bitmask expansion
        auto det = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
            int k = static_cast<int>(rows.size());
            std::vector<int> perm(k);
            for (int i = 0; i < k; ++i) perm[i] = i;
            bigint total = 0;
            // Heap's algorithm over permutations with sign tracking
            std::function<void(int, int)> rec = [&](int depth, int sign) {
                if (depth == k) {
                    bigint term = sign;
                    for (int i = 0; i < k; ++i) term *= a[rows[i]][cols[perm[i]]];
                    total += term;
                    return;
                }
                for (int i = depth; i < k; ++i) {
                    std::swap(perm[depth], perm[i]);
                    rec(depth + 1, i == depth ? sign : -sign);
                    std::swap(perm[depth], perm[i]);
                }
            };
            rec(0, 1);
            return total;
        };
        using boost::multiprecision::gcd;
        using boost::multiprecision::abs;
        for (std::size_t k = 1; k <= f.size() && k <= 3; ++k) {
            bigint g = 0;
            // iterate all k-subsets of rows and cols
            std::vector<int> ridx(k), cidx(k);
            std::function<void(int, int)> pick_rows = [&](int start, int depth) {
                if (depth == static_cast<int>(k)) {
                    std::function<void(int, int)> pick_cols = [&](int cstart, int cdepth) {
                        if (cdepth == static_cast<int>(k)) {
                            g = gcd(g, abs(det(ridx, cidx)));
                            return;
                        }
                        for (int c = cstart; c < n; ++c) {
                            cidx[cdepth] = c;
                            pick_cols(c + 1, cdepth + 1);
                        }
                    };
                    pick_cols(0, 0);
                    return;
                }
                for (int r = start; r < n; ++r) {
                    ridx[depth] = r;
                    pick_rows(r + 1, depth + 1);
                }
            };
            pick_rows(0, 0);
            bigint prod = 1;
            for (std::size_t i = 0; i < k; ++i) prod *= f[i];
            CHECK(g == prod);
        }
    }
}
