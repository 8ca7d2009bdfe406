#include "rdom/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rdom {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph edgeless_graph(int n) {
  require(n >= 0, "edgeless_graph: n must be >= 0");
  return Graph(n);
}

Graph path_graph(int n) {
  require(n >= 1, "path_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite: parts must be non-empty");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph::from_edges(m + n, edges);
}

Graph star(int n) {
  require(n >= 1, "star: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, edges);
}

Graph cube_graph() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if ((v & bit) == 0) edges.emplace_back(v, v | bit);
  return Graph::from_edges(8, edges);
}

Graph icosahedron_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i;
    const int up_next = 1 + (i + 1) % 5;
    const int low = 6 + i;
    const int low_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(up, low);
    edges.emplace_back(up, low_next);
    edges.emplace_back(low, low_next);
    edges.emplace_back(11, low);
  }
  return Graph::from_edges(12, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + g.order(), e.v + g.order());
  return Graph::from_edges(g.order() + h.order(), edges);
}

Graph join_graph(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = disjoint_union(g, h).edges();
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < h.order(); ++y) edges.emplace_back(x, g.order() + y);
  return Graph::from_edges(g.order() + h.order(), edges);
}

Graph two_cliques_bridge(int r) {
  require(r >= 4, "two_cliques_bridge: r must be >= 4");
  const Graph k = complete_graph(r);
  std::vector<Edge> edges = disjoint_union(k, k).edges();
  edges.emplace_back(0, r);
  return Graph::from_edges(2 * r, edges);
}

Graph figure3_graph() {
  return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}, {2, 6}, {2, 7}});
}

}  // namespace rdom
