#include "homtop/graph.hpp"

#include <algorithm>
#include <bit>

namespace homtop {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw parameter_error("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    labels_.resize(n_);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw parameter_error("edge endpoint out of range");
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

bool Graph::has_any_loop() const {
    for (int v = 0; v < n_; ++v)
        if (has_loop(v)) return true;
    return false;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(adj_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0, loops = 0;
    for (int v = 0; v < n_; ++v) {
        twice += static_cast<std::size_t>(degree(v));
        if (has_loop(v)) ++loops;
    }
    return (twice + loops) / 2; // each loop contributes 1 to its row
}

std::uint64_t Graph::neighbors64(int v) const {
    if (n_ > 64) throw parameter_error("graph exceeds the 64-vertex universe");
    return n_ == 0 ? 0 : adj_[static_cast<std::size_t>(v) * words_];
}

bool Graph::same_structure(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

GraphHom::GraphHom(std::shared_ptr<const Graph> src, std::shared_ptr<const Graph> tgt,
                   std::vector<int> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
    if (static_cast<int>(map.size()) != source->vertex_count())
        throw shape_error("map length does not match source vertex count");
    for (int v : map)
        if (v < 0 || v >= target->vertex_count())
            throw shape_error("map value out of target range");
}

bool is_homomorphism(const GraphHom& h) {
    const Graph& s = *h.source;
    const Graph& t = *h.target;
    for (int u = 0; u < s.vertex_count(); ++u)
        for (int v = u; v < s.vertex_count(); ++v)
            if (s.adjacent(u, v) && !t.adjacent(h.map[u], h.map[v])) return false;
    return true;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.vertex_count() + h.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        out.set_label(u, g.label(u));
        for (int v = u; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) out.add_edge(u, v);
    }
    int off = g.vertex_count();
    for (int u = 0; u < h.vertex_count(); ++u) {
        out.set_label(off + u, h.label(u));
        for (int v = u; v < h.vertex_count(); ++v)
            if (h.adjacent(u, v)) out.add_edge(off + u, off + v);
    }
    return out;
}

Graph direct_product(const Graph& g, const Graph& h) {
    int gn = g.vertex_count(), hn = h.vertex_count();
    Graph out(gn * hn);
    auto id = [hn](int x, int y) { return x * hn + y; };
    for (int x = 0; x < gn; ++x)
        for (int y = 0; y < hn; ++y)
            out.set_label(id(x, y), "(" + std::to_string(x) + "," + std::to_string(y) + ")");
    for (int x = 0; x < gn; ++x)
        for (int xp = 0; xp < gn; ++xp) {
            if (!g.adjacent(x, xp)) continue;
            for (int y = 0; y < hn; ++y)
                for (int yp = 0; yp < hn; ++yp)
                    if (h.adjacent(y, yp)) out.add_edge(id(x, y), id(xp, yp));
        }
    return out;
}

Graph strong_complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph apex_plus(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n + 1);
    for (int u = 0; u < n; ++u) {
        out.set_label(u, g.label(u));
        for (int v = u; v < n; ++v)
            if (g.adjacent(u, v)) out.add_edge(u, v);
    }
    out.set_label(n, "apex");
    for (int u = 0; u <= n; ++u) out.add_edge(u, n); // includes the loop at the apex
    return out;
}

Graph power_graph(const Graph& k, const Graph& h, std::size_t size_cap) {
    int kn = k.vertex_count(), hn = h.vertex_count();
    double approx = 1;
    for (int i = 0; i < hn; ++i) approx *= kn;
    if (approx > static_cast<double>(size_cap))
        throw budget_error("power graph would have " + std::to_string(approx) + " vertices",
                           static_cast<std::size_t>(std::min(approx, 1e18)));
    std::size_t n = 1;
    for (int i = 0; i < hn; ++i) n *= static_cast<std::size_t>(kn);

    // function index: row-major, f(0) most significant
    std::vector<int> digit(n * static_cast<std::size_t>(std::max(hn, 1)));
    for (std::size_t f = 0; f < n; ++f) {
        std::size_t rest = f;
        for (int v = hn - 1; v >= 0; --v) {
            digit[f * hn + v] = static_cast<int>(rest % static_cast<std::size_t>(kn));
            rest /= static_cast<std::size_t>(kn);
        }
    }
    Graph out(static_cast<int>(n));
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = f; g < n; ++g) {
            bool edge = true;
            for (int v = 0; v < hn && edge; ++v)
                for (int w = 0; w < hn && edge; ++w)
                    if (h.adjacent(v, w) && !k.adjacent(digit[f * hn + v], digit[g * hn + w]))
                        edge = false;
            if (edge) out.add_edge(static_cast<int>(f), static_cast<int>(g));
        }
    return out;
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
    return true;
}

bool is_involution(const std::vector<int>& perm) {
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        if (perm[perm[i]] != i) return false;
    return true;
}

} // namespace homtop
