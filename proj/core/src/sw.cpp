#include "homtop/sw.hpp"

#include <algorithm>

namespace homtop {

Z2ActionOnComplex induced_action(const Graph& t, const Graph& g,
                                 const std::vector<int>& gamma_t,
                                 const std::vector<int>& gamma_g, const ProdComplex& x) {
    if (!is_automorphism(t, gamma_t)) throw parameter_error("gamma_t is not an automorphism");
    if (!is_automorphism(g, gamma_g)) throw parameter_error("gamma_g is not an automorphism");
    if (!is_involution(gamma_t)) throw parameter_error("gamma_t must have order dividing 2");
    if (!is_involution(gamma_g)) throw parameter_error("gamma_g must have order dividing 2");

    int tn = x.positions();
    Z2ActionOnComplex act;
    act.image.resize(x.dim() + 1);
    act.free = true;
    Eta img(tn);
    for (int d = 0; d <= x.dim(); ++d) {
        act.image[d].resize(x.cell_count(d));
        for (std::size_t i = 0; i < x.cell_count(d); ++i) {
            auto eta = x.cell(d, i);
            for (int p = 0; p < tn; ++p) {
                std::uint64_t w = eta[gamma_t[p]]; // involution: gamma^{-1} = gamma
                std::uint64_t m = 0;
                while (w) {
                    m |= std::uint64_t(1) << gamma_g[std::countr_zero(w)];
                    w &= w - 1;
                }
                img[p] = m;
            }
            long long j = x.find_cell(d, {img.data(), img.size()});
            if (j < 0) throw defect_error("involution image is not a cell");
            act.image[d][i] = static_cast<std::uint32_t>(j);
            if (static_cast<std::size_t>(j) == i && act.free) {
                act.free = false;
                act.fixed_cell = {d, i};
            }
        }
    }
    // involution check: applying twice must be the identity
    for (int d = 0; d <= x.dim(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i)
            if (act.image[d][act.image[d][i]] != i)
                throw defect_error("induced map is not an involution on cells");
    return act;
}

const SparseBitMatrix& QuotientComplex::coboundary(int k) const {
    if (k < 1 || k > dim()) throw shape_error("no coboundary matrix in this dimension");
    return cobnd_[k];
}

SimplicialComplex QuotientComplex::as_simplicial() const {
    SimplicialComplex q(n_qverts_);
    std::vector<std::uint32_t> verts;
    for (int d = 0; d <= dim(); ++d)
        for (std::size_t i = 0; i < count(d); ++i) {
            auto chain = rep(d, i);
            verts.clear();
            for (auto v : chain) verts.push_back(orbit_of_vertex_[v]);
            // rank order of the chain gives distinct orbits; ids need sorting
            std::sort(verts.begin(), verts.end());
            q.add_simplex(verts);
        }
    q.seal();
    return q;
}

QuotientComplex quotient_complex(const ProdComplex& x, const Z2ActionOnComplex& a,
                                 std::size_t bd_budget, ABRule rule) {
    if (!a.free) {
        std::string what = "the involution is not free";
        if (a.fixed_cell)
            what += " (fixed cell in dimension " + std::to_string(a.fixed_cell->first) + ")";
        throw freeness_error(what);
    }
    SimplicialComplex bd = barycentric(x, bd_budget);
    std::size_t n = bd.vertex_count();

    // involution on subdivision vertices = cell involution on global ids
    std::vector<std::uint32_t> inv(n);
    for (std::size_t id = 0; id < n; ++id) {
        auto [d, i] = x.from_global(id);
        inv[id] = static_cast<std::uint32_t>(x.global_id(d, a.image[d][i]));
    }

    QuotientComplex q;
    q.labels_.assign(n, 0);
    q.orbit_of_vertex_.assign(n, 0);
    std::uint32_t next = 0;
    for (std::size_t id = 0; id < n; ++id) {
        if (id < inv[id]) {
            bool flip = rule == ABRule::parity_flip && (id % 2 == 0);
            q.labels_[id] = flip ? 1 : 0;
            q.labels_[inv[id]] = flip ? 0 : 1;
            q.orbit_of_vertex_[id] = next;
            q.orbit_of_vertex_[inv[id]] = next;
            ++next;
        }
    }
    q.n_qverts_ = next;

    int top = bd.dim();
    q.reps_.assign(std::max(top + 1, 0), {});
    std::vector<std::vector<std::uint32_t>> orbit_of_simplex(std::max(top + 1, 0));
    std::vector<std::uint32_t> img;
    for (int d = 0; d <= top; ++d) {
        std::size_t cnt = bd.count(d);
        orbit_of_simplex[d].assign(cnt, UINT32_MAX);
        std::uint32_t next_orbit = 0;
        for (std::size_t i = 0; i < cnt; ++i) {
            if (orbit_of_simplex[d][i] != UINT32_MAX) continue;
            auto s = bd.simplex(d, i);
            img.assign(s.begin(), s.end());
            for (auto& v : img) v = inv[v];
            std::sort(img.begin(), img.end());
            long long j = bd.find(d, img);
            if (j < 0) throw defect_error("involution image of a chain is not a chain");
            if (static_cast<std::size_t>(j) == i)
                throw freeness_error("a subdivision simplex is fixed by the involution");
            orbit_of_simplex[d][i] = next_orbit;
            orbit_of_simplex[d][static_cast<std::size_t>(j)] = next_orbit;
            // i < j here since unseen orbits are met at their smaller member
            q.reps_[d].insert(q.reps_[d].end(), s.begin(), s.end());
            ++next_orbit;
        }
    }

    // coboundary matrices from representatives: delete one chain element
    q.cobnd_.assign(std::max(top + 1, 0), {});
    std::vector<std::uint32_t> face;
    for (int k = 1; k <= top; ++k) {
        SparseBitMatrix m(q.count(k), q.count(k - 1));
        for (std::size_t i = 0; i < q.count(k); ++i) {
            auto chain = q.rep(k, i);
            for (int drop = 0; drop <= k; ++drop) {
                face.clear();
                for (int t = 0; t <= k; ++t)
                    if (t != drop) face.push_back(chain[t]);
                long long f = bd.find(k - 1, face);
                if (f < 0) throw defect_error("chain face missing from the subdivision");
                m.add_entry(i, orbit_of_simplex[k - 1][static_cast<std::size_t>(f)]);
            }
        }
        m.seal();
        q.cobnd_[k] = std::move(m);
    }
    return q;
}

SWCertificate sw_power_cocycle(const QuotientComplex& q, int k) {
    if (k < 1) throw parameter_error("power must be >= 1");
    SWCertificate cert;
    cert.k = k;
    std::size_t cnt = q.count(k);
    cert.cocycle = BitVector(cnt);
    for (std::size_t i = 0; i < cnt; ++i) {
        auto chain = q.rep(k, i);
        bool multicolored = true;
        for (int t = 0; t + 1 <= k && multicolored; ++t)
            if (q.label_b(chain[t]) == q.label_b(chain[t + 1])) multicolored = false;
        if (multicolored) cert.cocycle.set(i);
    }
    if (k + 1 <= q.dim() && q.coboundary(k + 1).apply(cert.cocycle).any())
        throw defect_error("power cochain is not closed");
    return cert;
}

HeightResult height(const ProdComplex& x, const Z2ActionOnComplex& a, int k_max,
                    std::size_t bd_budget) {
    HeightResult res;
    res.free = a.free;
    if (x.total_cells() == 0) {
        // no points at all: even the unit class vanishes
        res.h = -1;
        res.k_max = std::max(k_max, 0);
        return res;
    }
    QuotientComplex q = quotient_complex(x, a, bd_budget);
    if (k_max < 0) k_max = x.dim() + 1;
    res.k_max = k_max;
    res.h = 0;
    for (int k = 1; k <= k_max; ++k) {
        if (q.count(k) == 0) {
            // zero cochain in an empty group: trivial power
            SWCertificate cert;
            cert.k = k;
            cert.verdict = SWCertificate::Verdict::trivial;
            res.certificates.push_back(std::move(cert));
            break;
        }
        SWCertificate cert = sw_power_cocycle(q, k);
        auto sol = solve_gf2(q.coboundary(k), cert.cocycle);
        if (sol) {
            cert.verdict = SWCertificate::Verdict::trivial;
            cert.witness = std::move(sol);
            if (q.coboundary(k).apply(*cert.witness) != cert.cocycle)
                throw defect_error("coboundary witness does not verify");
            res.certificates.push_back(std::move(cert));
            break;
        }
        cert.verdict = SWCertificate::Verdict::nontrivial;
        res.h = k;
        res.certificates.push_back(std::move(cert));
    }
    return res;
}

} // namespace homtop
