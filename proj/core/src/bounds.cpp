#include "homtop/bounds.hpp"

#include <algorithm>
#include <fstream>

namespace homtop {

TestGraphSpec make_test_spec(Graph t, std::vector<int> involution, std::string name) {
    if (!is_automorphism(t, involution) || !is_involution(involution))
        throw parameter_error("test involution must be a graph involution");
    bool flips_edge = false;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (involution[v] != v && t.adjacent(v, involution[v])) flips_edge = true;
    if (!flips_edge) throw parameter_error("test involution must flip an edge");
    return {std::move(t), std::move(involution), std::move(name)};
}

TestGraphSpec make_test_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    if (name == "complete") {
        Graph t = make_named_graph(spec);
        std::vector<int> inv(t.vertex_count());
        for (int i = 0; i < t.vertex_count(); ++i) inv[i] = i;
        if (t.vertex_count() < 2) throw parameter_error("complete test graph needs n >= 2");
        inv[0] = 1;
        inv[1] = 0;
        return make_test_spec(std::move(t), std::move(inv), spec);
    }
    if (name == "cycle") {
        Graph t = make_named_graph(spec);
        int m = t.vertex_count();
        std::vector<int> inv(m);
        for (int i = 0; i < m; ++i) inv[i] = m - 1 - i;
        return make_test_spec(std::move(t), std::move(inv), spec + "+reflection");
    }
    throw parameter_error("unknown test graph spec '" + spec + "'");
}

namespace {

std::string cache_file_name(const std::string& test_name, int m) {
    std::string safe;
    for (char c : test_name) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            safe += c;
        else if (c == ':')
            safe += '_';
        else if (c == ',')
            safe += '-';
        else if (c == '+')
            safe += 'p';
    }
    return safe + "_m" + std::to_string(m) + ".json";
}

} // namespace

std::optional<int> HeightCache::get(const std::string& test_name, int m) const {
    auto it = mem_.find({test_name, m});
    if (it != mem_.end()) return it->second;
    if (dir_.empty()) return std::nullopt;
    std::ifstream in(dir_ + "/" + cache_file_name(test_name, m));
    if (!in) return std::nullopt;
    // minimal parse: {"test":"...","m":...,"h":...}; corrupt entries ignored
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = content.find("\"h\":");
    if (pos == std::string::npos) return std::nullopt;
    pos += 4;
    while (pos < content.size() && content[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < content.size() && (content[end] == '-' || std::isdigit(static_cast<unsigned char>(content[end])))) ++end;
    if (end == pos) return std::nullopt;
    int h = std::atoi(content.substr(pos, end - pos).c_str());
    mem_[{test_name, m}] = h;
    return h;
}

void HeightCache::put(const std::string& test_name, int m, int h) {
    mem_[{test_name, m}] = h;
    if (dir_.empty()) return;
    std::ofstream out(dir_ + "/" + cache_file_name(test_name, m));
    out << "{\"test\":\"" << test_name << "\",\"m\":" << m << ",\"h\":" << h << "}\n";
}

namespace {

int identity_height(const TestGraphSpec& spec, const Graph& g, const Budgets& budgets) {
    ProdComplex x = build_hom(spec.t, g, budgets.cell_budget);
    std::vector<int> id(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) id[i] = i;
    auto act = induced_action(spec.t, g, spec.involution, id, x);
    return height(x, act, -1, budgets.bd_budget).h;
}

} // namespace

BoundReport chrom_lower_bound(const TestGraphSpec& spec, const Graph& g,
                              const std::string& graph_name, int m_cap,
                              const Budgets& budgets, HeightCache* cache, bool with_chi,
                              int chi_cap) {
    if (!g.is_loopfree()) throw parameter_error("bounds need a loopfree graph");
    BoundReport report;
    report.graph_name = graph_name;
    report.test_name = spec.name;
    report.theorem = "Thm 7.9";
    report.clique = clique_bound(g);

    bool have_hg = false;
    try {
        report.h_g = identity_height(spec, g, budgets);
        have_hg = true;
    } catch (const budget_error& e) {
        report.partial_stages.push_back("height(Hom(T,G)): " + std::string(e.what()));
    }

    if (have_hg) {
        // reference heights are nondecreasing in m: stop at the first m that
        // catches up with h_g, everything below certifies a bound. The m = 1
        // reference is the empty complex; it certifies bound 2 whenever
        // Hom(T,G) is nonempty.
        for (int m = 1; m <= m_cap; ++m) {
            int hm;
            auto cached = cache ? cache->get(spec.name, m) : std::nullopt;
            if (cached) {
                hm = *cached;
            } else {
                try {
                    hm = identity_height(spec, complete_graph(m), budgets);
                } catch (const budget_error& e) {
                    report.partial_stages.push_back("height(Hom(T,K_" + std::to_string(m) +
                                                    ")): " + std::string(e.what()));
                    break;
                }
                if (cache) cache->put(spec.name, m, hm);
            }
            report.refs.emplace_back(m, hm);
            if (hm >= report.h_g) break;
        }
        report.bound = 1;
        for (auto [m, hm] : report.refs)
            if (hm < report.h_g) report.bound = std::max(report.bound, m + 1);
        report.capped = !report.refs.empty() && report.refs.back().second < report.h_g &&
                        report.partial_stages.empty();
    }

    if (with_chi) {
        auto chi = chromatic_number_exact(g, chi_cap);
        if (chi.kind == ChromaticResult::Kind::value) {
            report.chi_exact = chi.value;
            if (report.bound > chi.value)
                throw defect_error("bound exceeds the exact chromatic number");
        }
    }
    return report;
}

BoundReport complete_graph_bound(int n, const Graph& g, const std::string& graph_name,
                                 const Budgets& budgets, bool with_chi, int chi_cap) {
    if (n < 2) throw parameter_error("complete test graph needs n >= 2");
    if (!g.is_loopfree()) throw parameter_error("bounds need a loopfree graph");
    TestGraphSpec spec = make_test_spec("complete:" + std::to_string(n));
    BoundReport report;
    report.graph_name = graph_name;
    report.test_name = spec.name;
    report.theorem = "Thm 7.10";
    report.clique = clique_bound(g);
    try {
        report.h_g = identity_height(spec, g, budgets);
        report.bound = report.h_g >= 0 ? n + report.h_g : 1;
    } catch (const budget_error& e) {
        report.partial_stages.push_back("height(Hom(K_n,G)): " + std::string(e.what()));
        report.bound = 1;
    }
    if (with_chi) {
        auto chi = chromatic_number_exact(g, chi_cap);
        if (chi.kind == ChromaticResult::Kind::value) {
            report.chi_exact = chi.value;
            if (report.bound > chi.value)
                throw defect_error("bound exceeds the exact chromatic number");
        }
    }
    return report;
}

long long f_oracle(int m, int n) {
    if (m < 1 || n < 1) throw parameter_error("f is defined for m, n >= 1");
    if (m > n) return 0;
    // recurrence with boundary f(k,k) = k!-1 and f(1,n) = 0
    std::vector<std::vector<long long>> f(m + 1, std::vector<long long>(n + 1, 0));
    long long fact = 1;
    for (int k = 1; k <= m; ++k) {
        fact *= k;
        if (k <= n) f[k][k] = fact - 1;
    }
    for (int a = 2; a <= m; ++a)
        for (int b = a + 1; b <= n; ++b) f[a][b] = a * f[a - 1][b - 1] + (a - 1) * f[a][b - 1];
    return f[m][n];
}

long long f_closed_form(int m, int n) {
    if (m < 1 || n < 1) throw parameter_error("f is defined for m, n >= 1");
    if (m > n) return 0;
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    long long total = 0;
    for (int k = 1; k <= m - 1; ++k) {
        long long pw = 1;
        for (int i = 0; i < n; ++i) pw *= k;
        long long term = binom(m, k + 1) * pw;
        total += ((m + k + 1) % 2 == 0) ? term : -term;
    }
    return total;
}

int clique_bound(const Graph& g) { return clique_number(g); }

} // namespace homtop
