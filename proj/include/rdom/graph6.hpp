#pragma once

#include <string>
#include <string_view>

#include "rdom/graph.hpp"

namespace rdom {

// graph6 encoding: a length field followed by the upper triangle in column
// order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte
// offset by 63. A leading ">>graph6<<" header is accepted and stripped.
Graph parse_graph6(std::string_view text);
// Orders above 62 are rejected.
std::string write_graph6(const Graph& g);

}  // namespace rdom
