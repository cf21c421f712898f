#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gqt/graph.hpp"

namespace gqt {

// McKay's graph6 encoding: size prefix, then the upper triangle in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte
// with offset 63. Throws GraphError on malformed input.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// One graph per line; blank lines and a leading ">>graph6<<" header are skipped.
std::vector<Graph> read_graph6(std::istream& in);
void write_graph6(std::ostream& out, const Graph& g);

}  // namespace gqt
