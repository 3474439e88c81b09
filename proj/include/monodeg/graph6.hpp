#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "monodeg/graph.hpp"

namespace monodeg {

// graph6 ASCII encoding of simple undirected graphs: a vertex-count header
// followed by the upper triangle bit-packed column-major, six bits per byte,
// each byte offset by 63. Throws Graph6Error with the byte offset on
// malformed input; insists on zero padding bits.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Reads one graph per line, skipping blank lines and an optional
// ">>graph6<<" header token.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace monodeg
