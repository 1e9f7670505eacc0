#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "homtop/graph.hpp"

namespace homtop {

Graph complete_graph(int n) {
    if (n < 1) throw parameter_error("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int m) {
    if (m < 3) throw parameter_error("cycle needs m >= 3");
    Graph g(m);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw parameter_error("path needs n >= 1 vertices");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

namespace {

std::vector<std::vector<int>> k_subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::string subset_label(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
        if (std::binary_search(b.begin(), b.end(), x)) return false;
    return true;
}

} // namespace

Graph kneser_graph(int n, int k) {
    if (k < 1 || n < 2 * k) throw parameter_error("kneser graph needs n >= 2k >= 2");
    auto subsets = k_subsets_lex(n, k);
    Graph g(static_cast<int>(subsets.size()));
    for (std::size_t i = 0; i < subsets.size(); ++i) g.set_label(static_cast<int>(i), subset_label(subsets[i]));
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if (disjoint(subsets[i], subsets[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph stable_kneser_graph(int n, int k) {
    if (k < 1 || n < 2 * k) throw parameter_error("stable kneser graph needs n >= 2k >= 2");
    auto all = k_subsets_lex(n, k);
    std::vector<std::vector<int>> stable;
    for (auto& s : all) {
        bool ok = true;
        for (int x : s)
            if (std::binary_search(s.begin(), s.end(), (x + 1) % n)) {
                ok = false;
                break;
            }
        if (ok) stable.push_back(s);
    }
    Graph g(static_cast<int>(stable.size()));
    for (std::size_t i = 0; i < stable.size(); ++i) g.set_label(static_cast<int>(i), subset_label(stable[i]));
    for (std::size_t i = 0; i < stable.size(); ++i)
        for (std::size_t j = i + 1; j < stable.size(); ++j)
            if (disjoint(stable[i], stable[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph circular_graph(int n, int k) {
    if (k < 1 || n < 2 * k) throw parameter_error("circular graph needs n >= 2k >= 2");
    Graph g(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int d = y - x;
            if (d >= k && d <= n - k) g.add_edge(x, y);
        }
    return g;
}

Graph looped_vertex() {
    Graph g(1);
    g.add_edge(0, 0);
    return g;
}

bool looks_like_named_graph(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0) return false;
    for (std::size_t i = 0; i < colon; ++i)
        if (!(std::islower(static_cast<unsigned char>(spec[i])) || spec[i] == '-')) return false;
    for (std::size_t i = colon + 1; i < spec.size(); ++i)
        if (!(std::isdigit(static_cast<unsigned char>(spec[i])) || spec[i] == ',')) return false;
    return colon + 1 < spec.size();
}

Graph make_named_graph(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw parameter_error("graph spec must look like name:params, got '" + spec + "'");
    std::string name = spec.substr(0, colon);
    std::vector<int> params;
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw parameter_error("bad integer parameter '" + tok + "' in '" + spec + "'");
        params.push_back(std::atoi(tok.c_str()));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw parameter_error("'" + name + "' expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "complete") {
        want(1);
        return complete_graph(params[0]);
    }
    if (name == "cycle") {
        want(1);
        return cycle_graph(params[0]);
    }
    if (name == "path") {
        want(1);
        return path_graph(params[0]);
    }
    if (name == "kneser") {
        want(2);
        return kneser_graph(params[0], params[1]);
    }
    if (name == "stable-kneser") {
        want(2);
        return stable_kneser_graph(params[0], params[1]);
    }
    if (name == "circular") {
        want(2);
        return circular_graph(params[0], params[1]);
    }
    throw parameter_error("unknown graph generator '" + name + "'");
}

} // namespace homtop
