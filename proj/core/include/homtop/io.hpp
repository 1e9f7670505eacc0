#pragma once

#include <iosfwd>
#include <string>

#include "homtop/complex.hpp"
#include "homtop/graph.hpp"

namespace homtop {

// Text format: `n <count>` line first, then `e <u> <v>` lines (0-indexed,
// loops as `e u u`), `#` starts a comment. Throws parse_error with the
// offending line number.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// One cell per line: `dim | S0;S1;...;St-1`, each entry a comma-separated
// sorted vertex list or `-` when empty.
void dump_complex(std::ostream& out, const ProdComplex& x);
std::string format_cell(const ProdComplex& x, int d, std::size_t i);

// Named spec (`kneser:5,2`) or a file path, decided by shape.
Graph load_graph_argument(const std::string& arg);

} // namespace homtop
