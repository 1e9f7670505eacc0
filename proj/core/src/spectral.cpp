#include "homtop/spectral.hpp"

#include <algorithm>
#include <bit>

#include "homtop/homology.hpp"

namespace homtop {

long long Tableau::euler_sum() const {
    long long total = 0;
    for (const auto& [pq, r] : ranks)
        total += ((pq.first + pq.second) % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
    return total;
}

namespace {

Graph induced_subgraph(const Graph& g, std::uint32_t mask, std::vector<int>& local_of) {
    int n = g.vertex_count();
    local_of.assign(n, -1);
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) {
            local_of[v] = static_cast<int>(verts.size());
            verts.push_back(v);
        }
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a; b < verts.size(); ++b)
            if (g.adjacent(verts[a], verts[b]))
                out.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

// coboundary matrices of a simplicial complex: cobnd[q] maps C^{q-1} to C^q
std::vector<SparseBitMatrix> coboundaries(const SimplicialComplex& bd) {
    auto cc = chain_complex_gf2(bd);
    std::vector<SparseBitMatrix> out(cc.boundary.size());
    for (std::size_t q = 1; q < cc.boundary.size(); ++q) out[q] = cc.boundary[q].transpose();
    return out;
}

// basis of H^q: kernel vectors of cobnd[q+1] reduced against im cobnd[q]
std::vector<std::vector<BitVector>> cohomology_bases(const SimplicialComplex& bd,
                                                     const std::vector<SparseBitMatrix>& cobnd) {
    int top = bd.dim();
    std::vector<std::vector<BitVector>> bases(std::max(top + 1, 0));
    for (int q = 0; q <= top; ++q) {
        std::size_t nq = bd.count(q);
        std::vector<BitVector> cocycles;
        if (q < top) {
            cocycles = kernel_gf2(cobnd[q + 1]); // kernel of delta_q : C^q -> C^{q+1}
        } else {
            // top dimension: every cochain is a cocycle
            cocycles.reserve(nq);
            for (std::size_t i = 0; i < nq; ++i) {
                BitVector e(nq);
                e.set(i);
                cocycles.push_back(std::move(e));
            }
        }
        Gf2Reducer reducer;
        if (q >= 1)
            for (std::size_t j = 0; j < cobnd[q].cols(); ++j)
                reducer.add(BitVector::from_indices(nq, cobnd[q].column(j)));
        std::vector<BitVector> kept;
        for (auto& z : cocycles)
            if (reducer.add(z)) kept.push_back(z);
        bases[q] = std::move(kept);
    }
    return bases;
}

} // namespace

E1Page e1_tableau(const Graph& t, const Graph& g, const Budgets& budgets, bool with_bases) {
    int tn = t.vertex_count();
    if (tn > 31) throw parameter_error("spectral tableau supports at most 31 source vertices");
    E1Page page;
    page.t = t;
    page.g = g;
    page.tableau.page = 1;
    page.has_bases = with_bases;

    for (std::uint32_t mask = 1; mask < (1u << tn); ++mask) {
        int p = std::popcount(mask) - 1;
        std::vector<int> local_of;
        Graph ts = induced_subgraph(t, mask, local_of);
        ProdComplex cells = [&] {
            try {
                return build_hom(ts, g, budgets.cell_budget);
            } catch (budget_error& e) {
                throw budget_error("subset {" + std::to_string(mask) +
                                       "}: " + std::string(e.what()),
                                   e.count);
            }
        }();
        if (with_bases) {
            SimplicialComplex bd = barycentric(cells, budgets.bd_budget);
            auto cobnd = coboundaries(bd);
            auto bases = cohomology_bases(bd, cobnd);
            for (int q = 0; q < static_cast<int>(bases.size()); ++q)
                if (!bases[q].empty()) page.tableau.ranks[{p, q}] += bases[q].size();
            page.summands.push_back({mask, std::move(bd), std::move(cells), std::move(bases),
                                     std::move(cobnd)});
        } else {
            auto betti = betti_gf2(cells);
            for (std::size_t q = 0; q < betti.size(); ++q)
                if (betti[q]) page.tableau.ranks[{p, static_cast<int>(q)}] += betti[q];
        }
    }
    ProdComplex plus = build_hom_plus(t, g, budgets.cell_budget);
    page.hom_plus_euler = euler_characteristic(plus);
    return page;
}

namespace {

// pullback of a cochain along the subdivision map induced by restricting
// cells of Hom(T[S'],G) to S (drop one position)
BitVector pullback(const E1Summand& target /*S'*/, const E1Summand& source /*S*/,
                   const std::vector<int>& drop_map, int q, const BitVector& cochain) {
    // drop_map: positions of source complex inside target complex positions
    const SimplicialComplex& bd_to = target.bd;
    const ProdComplex& cells_to = target.cells;
    const ProdComplex& cells_from = source.cells;
    const SimplicialComplex& bd_from = source.bd;

    std::size_t n_to = cells_to.total_cells();
    std::vector<std::uint32_t> restricted(n_to);
    Eta sub(cells_from.positions());
    for (std::size_t id = 0; id < n_to; ++id) {
        auto [d, i] = cells_to.from_global(id);
        auto eta = cells_to.cell(d, i);
        for (int pos = 0; pos < cells_from.positions(); ++pos) sub[pos] = eta[drop_map[pos]];
        int sd = cells_from.cell_dim({sub.data(), sub.size()});
        long long j = cells_from.find_cell(sd, {sub.data(), sub.size()});
        if (j < 0) throw defect_error("restricted cell not found in the smaller complex");
        restricted[id] =
            static_cast<std::uint32_t>(cells_from.global_id(sd, static_cast<std::size_t>(j)));
    }

    BitVector out(bd_to.count(q));
    std::vector<std::uint32_t> image;
    for (std::size_t s = 0; s < bd_to.count(q); ++s) {
        auto chain = bd_to.simplex(q, s);
        image.clear();
        bool nondegenerate = true;
        for (auto v : chain) {
            std::uint32_t w = restricted[v];
            if (!image.empty() && image.back() == w) {
                nondegenerate = false;
                break;
            }
            image.push_back(w);
        }
        if (!nondegenerate) continue;
        // restriction preserves the face order, so image is ascending
        long long j = bd_from.find(q, image);
        if (j < 0) throw defect_error("image chain missing from the smaller subdivision");
        if (cochain.test(static_cast<std::size_t>(j))) out.set(s);
    }
    return out;
}

} // namespace

D1Maps d1_maps(const E1Page& e1) {
    if (!e1.has_bases)
        throw parameter_error("the differential needs a page built with cocycle bases");
    D1Maps d1;
    int tn = e1.t.vertex_count();
    std::map<std::uint32_t, std::size_t> index_of_mask;
    for (std::size_t i = 0; i < e1.summands.size(); ++i)
        index_of_mask[e1.summands[i].subset] = i;

    // basis offsets per (p, q) in subset order
    auto offsets = [&](int p, int q) {
        std::vector<std::pair<std::size_t, std::size_t>> out; // (summand index, offset)
        std::size_t off = 0;
        for (std::size_t i = 0; i < e1.summands.size(); ++i) {
            const auto& s = e1.summands[i];
            if (std::popcount(s.subset) != p + 1) continue;
            std::size_t r = q < static_cast<int>(s.cocycle_basis.size())
                                ? s.cocycle_basis[q].size()
                                : 0;
            out.emplace_back(i, off);
            off += r;
        }
        return std::make_pair(out, off);
    };

    int qmax = 0;
    for (const auto& [pq, r] : e1.tableau.ranks) qmax = std::max(qmax, pq.second);

    for (int p = 0; p + 1 < tn; ++p) {
        for (int q = 0; q <= qmax; ++q) {
            auto [src_off, src_total] = offsets(p, q);
            auto [dst_off, dst_total] = offsets(p + 1, q);
            if (src_total == 0 || dst_total == 0) {
                d1.blocks[{p, q}] = SparseBitMatrix(dst_total, src_total);
                d1.blocks[{p, q}].seal();
                continue;
            }
            std::map<std::size_t, std::size_t> dst_offset_of_summand;
            for (auto [i, off] : dst_off) dst_offset_of_summand[i] = off;

            SparseBitMatrix block(dst_total, src_total);
            for (auto [si, soff] : src_off) {
                const auto& src = e1.summands[si];
                std::size_t nbasis =
                    q < static_cast<int>(src.cocycle_basis.size()) ? src.cocycle_basis[q].size() : 0;
                if (nbasis == 0) continue;
                for (int x = 0; x < tn; ++x) {
                    if (src.subset & (1u << x)) continue;
                    std::uint32_t bigger = src.subset | (1u << x);
                    std::size_t ti = index_of_mask.at(bigger);
                    const auto& dst = e1.summands[ti];
                    std::size_t dst_rank = q < static_cast<int>(dst.cocycle_basis.size())
                                               ? dst.cocycle_basis[q].size()
                                               : 0;

                    // positions of src inside dst (both sorted subsets)
                    std::vector<int> drop_map;
                    {
                        std::vector<int> dst_verts, src_verts;
                        for (int v = 0; v < tn; ++v) {
                            if (bigger & (1u << v)) dst_verts.push_back(v);
                            if (src.subset & (1u << v)) src_verts.push_back(v);
                        }
                        for (int v : src_verts) {
                            auto it = std::lower_bound(dst_verts.begin(), dst_verts.end(), v);
                            drop_map.push_back(static_cast<int>(it - dst_verts.begin()));
                        }
                    }

                    // system expressing a class in the dst basis modulo coboundaries
                    std::size_t nq = dst.bd.count(q);
                    std::size_t extra = q >= 1 ? dst.cobnd[q].cols() : 0;
                    SparseBitMatrix sys(nq, dst_rank + extra);
                    for (std::size_t j = 0; j < dst_rank; ++j)
                        for (auto i : dst.cocycle_basis[q][j].set_indices()) sys.add_entry(i, j);
                    if (q >= 1)
                        for (std::size_t j = 0; j < extra; ++j)
                            for (auto i : dst.cobnd[q].column(j)) sys.add_entry(i, dst_rank + j);
                    sys.seal();
                    Gf2Solver express(sys);

                    for (std::size_t b = 0; b < nbasis; ++b) {
                        BitVector z = pullback(dst, src, drop_map, q, src.cocycle_basis[q][b]);
                        // must be a cocycle in the bigger subdivision
                        if (q + 1 < static_cast<int>(dst.cobnd.size()) &&
                            dst.cobnd[q + 1].apply(z).any())
                            throw defect_error("pullback of a cocycle is not a cocycle");
                        if (!z.any()) continue;
                        auto sol = express.solve(z);
                        if (!sol) throw defect_error("pullback class escapes the stored basis");
                        std::size_t doff = dst_offset_of_summand.at(ti);
                        for (std::size_t j = 0; j < dst_rank; ++j)
                            if (sol->test(j)) block.add_entry(doff + j, soff + b);
                    }
                }
            }
            block.seal();
            d1.blocks[{p, q}] = std::move(block);
        }
    }
    return d1;
}

Tableau e2_tableau(const E1Page& e1, const D1Maps& d1) {
    Tableau e2;
    e2.page = 2;
    auto block_rank = [&](int p, int q) -> std::size_t {
        auto it = d1.blocks.find({p, q});
        if (it == d1.blocks.end()) return 0;
        return rank_gf2(it->second);
    };
    for (const auto& [pq, r] : e1.tableau.ranks) {
        auto [p, q] = pq;
        std::size_t out_rank = block_rank(p, q);
        std::size_t in_rank = block_rank(p - 1, q);
        std::size_t rk = r - out_rank - in_rank;
        if (rk > 0) e2.ranks[{p, q}] = rk;
    }
    return e2;
}

bool d1_squared_is_zero(const E1Page& e1, const D1Maps& d1) {
    for (const auto& [pq, first] : d1.blocks) {
        auto [p, q] = pq;
        auto it = d1.blocks.find({p + 1, q});
        if (it == d1.blocks.end()) continue;
        const auto& second = it->second;
        if (first.rows() != second.cols()) {
            if (first.rows() == 0 || second.cols() == 0) continue;
            throw defect_error("differential block shapes disagree");
        }
        for (std::size_t j = 0; j < first.cols(); ++j) {
            BitVector x(first.cols());
            x.set(j);
            if (second.apply(first.apply(x)).any()) return false;
        }
    }
    return true;
}

bool collapsed_by_sparsity(const Tableau& e2) {
    for (const auto& [pq, r] : e2.ranks) {
        auto [p, q] = pq;
        for (int n = 2; n <= 64; ++n) {
            if (e2.rank(p + n, q - n + 1) > 0) return false;
            if (e2.rank(p - n, q + n - 1) > 0) return false;
        }
    }
    return true;
}

std::vector<std::size_t> total_degree_ranks(const Tableau& t) {
    int dmax = 0;
    for (const auto& [pq, r] : t.ranks) dmax = std::max(dmax, pq.first + pq.second);
    std::vector<std::size_t> out(dmax + 1, 0);
    for (const auto& [pq, r] : t.ranks) out[pq.first + pq.second] += r;
    return out;
}

} // namespace homtop
