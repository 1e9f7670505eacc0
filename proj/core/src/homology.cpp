#include "homtop/homology.hpp"

#include <algorithm>

namespace homtop {

namespace {

void check_dd_zero(const ChainComplexGF2& cc) {
    for (std::size_t d = 1; d + 1 < cc.boundary.size(); ++d) {
        const auto& a = cc.boundary[d];     // (d-1) x d
        const auto& b = cc.boundary[d + 1]; // d x (d+1)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::vector<std::uint32_t> acc;
            for (auto i : b.column(j)) {
                const auto& col = a.column(i);
                std::vector<std::uint32_t> merged;
                merged.reserve(acc.size() + col.size());
                std::set_symmetric_difference(acc.begin(), acc.end(), col.begin(), col.end(),
                                              std::back_inserter(merged));
                acc = std::move(merged);
            }
            if (!acc.empty()) throw defect_error("boundary composed with boundary is nonzero");
        }
    }
}

} // namespace

ChainComplexGF2 chain_complex_gf2(const ProdComplex& x) {
    ChainComplexGF2 cc;
    int top = x.dim();
    cc.counts.resize(top + 1);
    for (int d = 0; d <= top; ++d) cc.counts[d] = x.cell_count(d);
    cc.boundary.resize(top + 1);
    if (top >= 0) cc.boundary[0] = SparseBitMatrix(0, cc.counts[0]);
    for (int d = 1; d <= top; ++d) {
        SparseBitMatrix m(cc.counts[d - 1], cc.counts[d]);
        for (std::size_t i = 0; i < cc.counts[d]; ++i)
            for (auto f : x.faces(d, i)) m.add_entry(f, i);
        m.seal();
        cc.boundary[d] = std::move(m);
    }
    check_dd_zero(cc);
    return cc;
}

ChainComplexGF2 chain_complex_gf2(const SimplicialComplex& y) {
    ChainComplexGF2 cc;
    int top = y.dim();
    cc.counts.resize(top + 1);
    for (int d = 0; d <= top; ++d) cc.counts[d] = y.count(d);
    cc.boundary.resize(top + 1);
    if (top >= 0) cc.boundary[0] = SparseBitMatrix(0, cc.counts[0]);
    std::vector<std::uint32_t> face;
    for (int d = 1; d <= top; ++d) {
        SparseBitMatrix m(cc.counts[d - 1], cc.counts[d]);
        for (std::size_t i = 0; i < cc.counts[d]; ++i) {
            auto s = y.simplex(d, i);
            for (int drop = 0; drop <= d; ++drop) {
                face.clear();
                for (int k = 0; k <= d; ++k)
                    if (k != drop) face.push_back(s[k]);
                long long j = y.find(d - 1, face);
                if (j < 0) throw defect_error("simplicial complex is not downward closed");
                m.add_entry(static_cast<std::size_t>(j), i);
            }
        }
        m.seal();
        cc.boundary[d] = std::move(m);
    }
    check_dd_zero(cc);
    return cc;
}

BettiVector betti_gf2(const ChainComplexGF2& cc) {
    int top = static_cast<int>(cc.counts.size()) - 1;
    BettiVector b(top + 1, 0);
    std::vector<std::size_t> rank(top + 2, 0);
    for (int d = 1; d <= top; ++d) rank[d] = rank_gf2(cc.boundary[d]);
    for (int d = 0; d <= top; ++d) b[d] = cc.counts[d] - rank[d] - rank[d + 1];
    return b;
}

BettiVector betti_gf2(const ProdComplex& x) { return betti_gf2(chain_complex_gf2(x)); }
BettiVector betti_gf2(const SimplicialComplex& y) { return betti_gf2(chain_complex_gf2(y)); }

std::vector<HomologyGroup> integer_homology(const SimplicialComplex& y) {
    int top = y.dim();
    std::vector<HomologyGroup> out(std::max(top + 1, 0));
    if (top < 0) return out;

    std::vector<std::vector<bigint>> factors(top + 2);
    std::vector<std::size_t> rank(top + 2, 0);
    std::vector<std::uint32_t> face;
    for (int d = 1; d <= top; ++d) {
        IntSparseMatrix m(y.count(d - 1), y.count(d));
        for (std::size_t i = 0; i < y.count(d); ++i) {
            auto s = y.simplex(d, i);
            int sign = 1;
            for (int drop = 0; drop <= d; ++drop) {
                face.clear();
                for (int k = 0; k <= d; ++k)
                    if (k != drop) face.push_back(s[k]);
                long long j = y.find(d - 1, face);
                if (j < 0) throw defect_error("simplicial complex is not downward closed");
                m.add_entry(static_cast<std::size_t>(j), i, sign);
                sign = -sign;
            }
        }
        m.seal();
        factors[d] = smith_normal_form(m);
        rank[d] = factors[d].size();
    }
    for (int d = 0; d <= top; ++d) {
        out[d].free_rank = y.count(d) - rank[d] - rank[d + 1];
        for (const auto& f : factors[d + 1])
            if (f > 1) out[d].torsion.push_back(f);
    }
    return out;
}

long long euler_characteristic(const ProdComplex& x) {
    long long chi = 0;
    for (int d = 0; d <= x.dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(x.cell_count(d));
    return chi;
}

long long euler_characteristic(const SimplicialComplex& y) {
    long long chi = 0;
    for (int d = 0; d <= y.dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(y.count(d));
    return chi;
}

long long euler_characteristic(const BettiVector& b) {
    long long chi = 0;
    for (std::size_t d = 0; d < b.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(b[d]);
    return chi;
}

} // namespace homtop
