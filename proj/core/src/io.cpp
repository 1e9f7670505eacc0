#include "homtop/io.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace homtop {

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_n = false;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        std::string kind;
        ls >> kind;
        if (kind == "n") {
            long long n;
            if (!(ls >> n) || n < 0)
                throw parse_error("expected `n <count>` with a nonnegative count", lineno);
            if (have_n) throw parse_error("duplicate vertex count line", lineno);
            g = Graph(static_cast<int>(n));
            have_n = true;
        } else if (kind == "e") {
            if (!have_n) throw parse_error("edge before the vertex count line", lineno);
            long long u, v;
            if (!(ls >> u >> v)) throw parse_error("expected `e <u> <v>`", lineno);
            if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
                throw parse_error("edge endpoint out of range", lineno);
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } else {
            throw parse_error("unknown line kind '" + kind + "'", lineno);
        }
    }
    if (!have_n) throw parse_error("missing vertex count line", lineno == 0 ? 1 : lineno);
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) out << "e " << u << " " << v << "\n";
}

std::string format_cell(const ProdComplex& x, int d, std::size_t i) {
    auto eta = x.cell(d, i);
    std::string out = std::to_string(d) + " | ";
    for (int p = 0; p < x.positions(); ++p) {
        if (p) out += ";";
        std::uint64_t w = eta[p];
        if (!w) {
            out += "-";
            continue;
        }
        bool first = true;
        while (w) {
            if (!first) out += ",";
            out += std::to_string(std::countr_zero(w));
            w &= w - 1;
            first = false;
        }
    }
    return out;
}

void dump_complex(std::ostream& out, const ProdComplex& x) {
    for (int d = 0; d <= x.dim(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i) out << format_cell(x, d, i) << "\n";
}

Graph load_graph_argument(const std::string& arg) {
    if (looks_like_named_graph(arg)) return make_named_graph(arg);
    return read_graph_file(arg);
}

} // namespace homtop
