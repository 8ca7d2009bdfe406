#pragma once

#include "rdom/graph.hpp"

namespace rdom {

// Vertex labelling of every constructor is documented alongside it; all
// throw std::invalid_argument for parameters out of range.

Graph edgeless_graph(int n);
// 0 - 1 - ... - (n-1), n >= 1.
Graph path_graph(int n);
// Path closed by the edge (n-1, 0), n >= 3.
Graph cycle_graph(int n);
Graph complete_graph(int n);
// Parts {0..m-1} and {m..m+n-1}, m, n >= 1.
Graph complete_bipartite(int m, int n);
// n vertices: centre 0, leaves 1..n-1, n >= 1.
Graph star(int n);
// 3-cube: vertices are 3-bit words, adjacent when they differ in one bit.
Graph cube_graph();
// Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
Graph icosahedron_graph();
// G's vertices keep their ids, H's are shifted by |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join_graph(const Graph& g, const Graph& h);
// Two copies of K_r on {0..r-1} and {r..2r-1} plus the edge (0, r), r >= 4.
Graph two_cliques_bridge(int r);
// 4-cycle 0-1-2-3-0 with leaves 4, 5 on vertex 0 and leaves 6, 7 on vertex 2.
Graph figure3_graph();

}  // namespace rdom
