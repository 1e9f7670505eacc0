#include <algorithm>
#include <functional>
#include <memory>

#include "homtop/graph.hpp"

namespace homtop {

namespace {

// Backtracking over source vertices in index order, candidate target vertices
// in ascending order; prunes on edges into the already-assigned prefix.
template <typename OnHom>
void for_each_hom(const Graph& t, const Graph& g, OnHom&& on_hom) {
    int tn = t.vertex_count(), gn = g.vertex_count();
    if (gn == 0 && tn > 0) return;
    std::vector<int> map(tn, -1);
    std::function<bool(int)> rec = [&](int x) -> bool {
        if (x == tn) return on_hom(map);
        for (int c = 0; c < gn; ++c) {
            bool ok = true;
            for (int y = 0; y <= x && ok; ++y)
                if (t.adjacent(x, y) && !g.adjacent(c, y == x ? c : map[y])) ok = false;
            if (!ok) continue;
            map[x] = c;
            if (!rec(x + 1)) return false;
        }
        map[x] = -1;
        return true;
    };
    rec(0);
}

} // namespace

HomEnumeration enumerate_homs(const Graph& t, const Graph& g, std::optional<std::size_t> limit) {
    if (limit && *limit < 1) throw parameter_error("enumeration limit must be >= 1");
    auto ts = std::make_shared<Graph>(t);
    auto gs = std::make_shared<Graph>(g);
    HomEnumeration out;
    for_each_hom(t, g, [&](const std::vector<int>& map) {
        if (limit && out.homs.size() == *limit) {
            out.truncated = true;
            return false;
        }
        out.homs.emplace_back(ts, gs, map);
        return true;
    });
    return out;
}

bool hom_exists(const Graph& t, const Graph& g) {
    bool found = false;
    for_each_hom(t, g, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

ChromaticResult chromatic_number_exact(const Graph& g, int cap) {
    if (cap < 1) throw parameter_error("chromatic cap must be >= 1");
    if (g.has_any_loop()) return {ChromaticResult::Kind::infinite, 0};
    if (g.vertex_count() == 0) return {ChromaticResult::Kind::value, 0};
    for (int n = 1; n <= cap; ++n)
        if (hom_exists(g, complete_graph(n))) return {ChromaticResult::Kind::value, n};
    return {ChromaticResult::Kind::exceeds_cap, 0};
}

FoldTrace fold_reduce(const Graph& g) {
    int n = g.vertex_count();
    // adjacency over surviving original ids
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) adj[u][v] = g.adjacent(u, v) ? 1 : 0;
    std::vector<char> alive(n, 1);

    FoldTrace trace;
    for (;;) {
        int fold_v = -1, fold_u = -1;
        for (int v = 0; v < n && fold_v < 0; ++v) {
            if (!alive[v]) continue;
            for (int u = 0; u < n; ++u) {
                if (u == v || !alive[u]) continue;
                bool contains = true;
                for (int w = 0; w < n && contains; ++w)
                    if (alive[w] && adj[v][w] && !adj[u][w]) contains = false;
                if (contains) {
                    fold_v = v;
                    fold_u = u;
                    break;
                }
            }
        }
        if (fold_v < 0) break;
        trace.removed.emplace_back(fold_v, fold_u);
        alive[fold_v] = 0;
    }

    int survivors = 0;
    trace.survivor_map.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) trace.survivor_map[v] = survivors++;
    Graph result(survivors);
    for (int u = 0; u < n; ++u) {
        if (!alive[u]) continue;
        result.set_label(trace.survivor_map[u], g.label(u));
        for (int v = u; v < n; ++v)
            if (alive[v] && adj[u][v]) result.add_edge(trace.survivor_map[u], trace.survivor_map[v]);
    }
    trace.result = std::move(result);
    return trace;
}

int winding_number(const GraphHom& h) {
    const Graph& s = *h.source;
    const Graph& t = *h.target;
    int m = s.vertex_count();
    if (!s.same_structure(cycle_graph(std::max(m, 3))))
        throw shape_error("winding number needs the standard cycle as source");
    if (!t.same_structure(complete_graph(3)))
        throw shape_error("winding number needs the standard K_3 as target");
    if (!is_homomorphism(h)) throw shape_error("map is not a homomorphism");
    int steps = 0;
    for (int i = 0; i < m; ++i) {
        int a = h.map[i], b = h.map[(i + 1) % m];
        steps += ((b - a + 3) % 3 == 1) ? 1 : -1;
    }
    return steps / 3;
}

std::optional<RationalWitness> rational_chromatic_search(const Graph& g, RationalKind kind,
                                                         int cap) {
    if (g.has_any_loop()) throw parameter_error("rational chromatic search needs a loopfree graph");
    if (cap < 2) throw parameter_error("cap must be >= 2");
    std::optional<RationalWitness> best;
    for (int n = 2; n <= cap; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            if (best && static_cast<long long>(n) * best->k >= static_cast<long long>(best->n) * k)
                continue; // not strictly better than the current ratio
            Graph state = kind == RationalKind::fractional ? kneser_graph(n, k) : circular_graph(n, k);
            auto found = enumerate_homs(g, state, 1);
            if (!found.homs.empty()) best = RationalWitness{n, k, found.homs[0].map};
        }
    return best;
}

namespace {

void clique_extend(const std::vector<std::uint64_t>& nbr, std::uint64_t cand, int size, int& best) {
    if (size > best) best = size;
    while (cand) {
        if (size + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique_extend(nbr, cand & nbr[v], size + 1, best);
    }
}

} // namespace

int clique_number(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > 64) throw parameter_error("clique search supports at most 64 vertices");
    std::vector<std::uint64_t> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbors64(v) & ~(std::uint64_t(1) << v);
    int best = 0;
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    clique_extend(nbr, all, 0, best);
    return best;
}

} // namespace homtop
