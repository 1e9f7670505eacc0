#include <algorithm>
#include <functional>

#include "homtop/complex.hpp"

namespace homtop {

std::size_t SimplicialComplex::total() const {
    std::size_t n = 0;
    for (int d = 0; d <= dim(); ++d) n += count(d);
    return n;
}

long long SimplicialComplex::find(int d, std::span<const std::uint32_t> verts) const {
    if (d < 0 || d > dim()) return -1;
    const auto& flat = simplices_[d];
    std::size_t stride = d + 1;
    std::size_t count = flat.size() / stride;
    std::size_t lo = 0, hi = count;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto s = flat.data() + mid * stride;
        if (std::lexicographical_compare(s, s + stride, verts.begin(), verts.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count && std::equal(flat.data() + lo * stride, flat.data() + (lo + 1) * stride,
                                 verts.begin()))
        return static_cast<long long>(lo);
    return -1;
}

void SimplicialComplex::add_simplex(std::span<const std::uint32_t> verts) {
    int d = static_cast<int>(verts.size()) - 1;
    if (d < 0) throw shape_error("empty simplex");
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        if (verts[i] >= verts[i + 1]) throw shape_error("simplex vertices must be strictly sorted");
    if (verts.back() >= nverts_) throw shape_error("simplex vertex out of range");
    if (d >= static_cast<int>(simplices_.size())) simplices_.resize(d + 1);
    simplices_[d].insert(simplices_[d].end(), verts.begin(), verts.end());
    sealed_ = false;
}

void SimplicialComplex::seal() {
    for (int d = 0; d <= dim(); ++d) {
        std::size_t stride = d + 1;
        auto& flat = simplices_[d];
        std::size_t n = flat.size() / stride;
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(flat.begin() + a * stride,
                                                flat.begin() + (a + 1) * stride,
                                                flat.begin() + b * stride,
                                                flat.begin() + (b + 1) * stride);
        });
        std::vector<std::uint32_t> out;
        out.reserve(flat.size());
        for (std::size_t k = 0; k < n; ++k) {
            auto begin = flat.begin() + order[k] * stride;
            if (!out.empty() && std::equal(begin, begin + stride, out.end() - stride)) continue;
            out.insert(out.end(), begin, begin + stride);
        }
        flat = std::move(out);
    }
    sealed_ = true;
}

SimplicialComplex barycentric(const ProdComplex& x, std::size_t budget) {
    if (budget < 1) throw parameter_error("budget must be >= 1");
    std::size_t n = x.total_cells();
    SimplicialComplex bd(n);
    std::vector<std::uint64_t> payload(n);
    for (std::size_t id = 0; id < n; ++id) payload[id] = id;
    bd.set_payload(std::move(payload));

    // All proper faces of each cell, precomputed once; chains are enumerated
    // by descending from each cell through its face lists.
    std::vector<std::vector<std::size_t>> below(n);
    for (std::size_t id = 0; id < n; ++id) {
        auto [d, i] = x.from_global(id);
        below[id] = x.all_proper_faces(d, i);
    }

    std::size_t emitted = 0;
    std::vector<std::uint32_t> chain;
    std::function<void(std::size_t)> descend = [&](std::size_t bottom) {
        if (++emitted > budget)
            throw budget_error("subdivision budget exhausted at " + std::to_string(emitted - 1) +
                                   " simplices",
                               emitted - 1);
        // chain currently holds (bottom < ... < top) in ascending global id
        bd.add_simplex(chain);
        for (std::size_t f : below[bottom]) {
            chain.insert(chain.begin(), static_cast<std::uint32_t>(f));
            descend(f);
            chain.erase(chain.begin());
        }
    };
    for (std::size_t id = 0; id < n; ++id) {
        chain.assign(1, static_cast<std::uint32_t>(id));
        descend(id);
    }
    bd.seal();
    return bd;
}

SimplicialComplex link_of_vertex(const ProdComplex& x, std::size_t vertex_index) {
    if (x.cell_count(0) <= vertex_index) throw lookup_error("vertex index out of range");
    auto v = x.cell(0, vertex_index);

    // cells strictly above v, in global-id order
    std::vector<std::size_t> above;
    for (int d = 1; d <= x.dim(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i) {
            auto c = x.cell(d, i);
            bool contains = true;
            for (int p = 0; p < x.positions() && contains; ++p)
                if ((v[p] & c[p]) != v[p]) contains = false;
            if (contains) above.push_back(x.global_id(d, i));
        }
    std::vector<long long> local(x.total_cells(), -1);
    for (std::size_t k = 0; k < above.size(); ++k) local[above[k]] = static_cast<long long>(k);

    SimplicialComplex link(above.size());
    std::vector<std::uint64_t> payload(above.begin(), above.end());
    link.set_payload(std::move(payload));

    std::vector<std::vector<std::uint32_t>> below(above.size());
    for (std::size_t k = 0; k < above.size(); ++k) {
        auto [d, i] = x.from_global(above[k]);
        for (std::size_t f : x.all_proper_faces(d, i))
            if (local[f] >= 0) below[k].push_back(static_cast<std::uint32_t>(local[f]));
    }

    std::vector<std::uint32_t> chain;
    std::function<void(std::size_t)> descend = [&](std::size_t bottom) {
        link.add_simplex(chain);
        for (std::uint32_t f : below[bottom]) {
            chain.insert(chain.begin(), f);
            descend(f);
            chain.erase(chain.begin());
        }
    };
    for (std::size_t k = 0; k < above.size(); ++k) {
        chain.assign(1, static_cast<std::uint32_t>(k));
        descend(k);
    }
    link.seal();
    return link;
}

SimplicialComplex build_independence(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (!g.has_loop(v)) verts.push_back(v);

    SimplicialComplex ind(verts.size());
    std::vector<std::uint64_t> payload(verts.begin(), verts.end());
    ind.set_payload(std::move(payload));

    // enumerate independent sets by extension over the unlooped vertices
    std::vector<std::uint32_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (!cur.empty()) ind.add_simplex(cur);
        for (std::size_t i = next; i < verts.size(); ++i) {
            bool ok = true;
            for (auto j : cur)
                if (g.adjacent(verts[j], verts[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(static_cast<std::uint32_t>(i));
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    ind.seal();
    return ind;
}

SimplicialComplex build_neighborhood(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) verts.push_back(v);
    std::vector<long long> local(n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<long long>(i);

    SimplicialComplex nb(verts.size());
    std::vector<std::uint64_t> payload(verts.begin(), verts.end());
    nb.set_payload(std::move(payload));

    // all nonempty subsets of each neighbor set
    std::vector<std::uint32_t> cur;
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint32_t> nbrs;
        for (int w = 0; w < n; ++w)
            if (g.adjacent(v, w)) nbrs.push_back(static_cast<std::uint32_t>(local[w]));
        std::sort(nbrs.begin(), nbrs.end());
        std::function<void(std::size_t)> rec = [&](std::size_t next) {
            if (!cur.empty()) nb.add_simplex(cur);
            for (std::size_t i = next; i < nbrs.size(); ++i) {
                cur.push_back(nbrs[i]);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    nb.seal();
    return nb;
}

} // namespace homtop
