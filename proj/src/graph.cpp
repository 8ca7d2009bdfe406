#include "rdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace rdom {

namespace {

void check_order(int order) {
  if (order < 0 || order > Graph::kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside 0.." +
                                std::to_string(Graph::kMaxOrder));
  }
}

std::string edge_name(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  check_order(order);
  adj_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= order) throw std::invalid_argument("edge " + edge_name(e) + " out of range");
    if (g.adjacent(e.u, e.v)) throw std::invalid_argument("duplicate edge " + edge_name(e));
    g.adj_[e.u] |= std::uint64_t{1} << e.v;
    g.adj_[e.v] |= std::uint64_t{1} << e.u;
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t all = VertexSet::first(n).bits();
  for (int v = 0; v < n; ++v) {
    if ((rows[v] >> v) & 1U) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    if (rows[v] & ~all) throw std::invalid_argument("neighbour out of range at vertex " + std::to_string(v));
    for (Vertex w : VertexSet(rows[v])) {
      if (!((rows[w] >> v) & 1U)) throw std::invalid_argument("adjacency is not symmetric");
    }
  }
  Graph g;
  g.order_ = n;
  g.adj_ = std::move(rows);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

VertexSet Graph::closed_neighborhood(VertexSet s) const {
  VertexSet out = s;
  for (Vertex v : s) out |= VertexSet(adj_[v]);
  return out;
}

int Graph::degree(Vertex v) const { return std::popcount(adj_[v]); }

int Graph::min_degree() const {
  int best = order_ == 0 ? 0 : order_;
  for (int v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (int v = 0; v < order_; ++v) out.push_back(degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for (Vertex v : VertexSet(adj_[u])) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Vertex Subgraph::local(Vertex parent_vertex) const {
  auto it = std::find(original.begin(), original.end(), parent_vertex);
  return it == original.end() ? -1 : static_cast<Vertex>(it - original.begin());
}

Subgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.subset_of(g.vertices())) throw std::invalid_argument("vertex set not contained in graph");
  Subgraph out;
  out.original = keep.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[out.original[i]] = static_cast<int>(i);
  std::vector<std::uint64_t> rows(out.original.size(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (Vertex w : g.neighbors(out.original[i]) & keep) rows[i] |= std::uint64_t{1} << index[w];
  }
  out.graph = Graph::from_adjacency(std::move(rows));
  return out;
}

Subgraph delete_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

Subgraph delete_vertices(const Graph& g, VertexSet removed) {
  if (!removed.subset_of(g.vertices())) throw std::invalid_argument("vertex set not contained in graph");
  return induced_subgraph(g, g.vertices() - removed);
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  for (const Edge& e : removed) {
    if (!g.has_edge(e)) throw std::invalid_argument("edge " + edge_name(e) + " not in graph");
    rows[e.u] &= ~(std::uint64_t{1} << e.v);
    rows[e.v] &= ~(std::uint64_t{1} << e.u);
  }
  return Graph::from_adjacency(std::move(rows));
}

Graph delete_edges(const Graph& g, std::initializer_list<Edge> removed) {
  return delete_edges(g, std::span<const Edge>(removed.begin(), removed.size()));
}

Graph isolate_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  std::vector<Edge> incident;
  for (Vertex w : g.neighbors(v)) incident.emplace_back(v, w);
  return delete_edges(g, incident);
}

std::vector<Subgraph> connected_components(const Graph& g) {
  std::vector<Subgraph> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= frontier;
    }
    unseen -= comp;
    out.push_back(induced_subgraph(g, comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  VertexSet reached = VertexSet::single(0);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - reached;
    reached |= frontier;
  }
  return reached == g.vertices();
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

VertexSet private_neighbors(const Graph& g, Vertex x, VertexSet xs) {
  if (!xs.contains(x)) throw std::invalid_argument("vertex " + std::to_string(x) + " not in the set");
  VertexSet out;
  for (Vertex y : g.closed_neighbors(x)) {
    if ((g.closed_neighbors(y) & xs) == VertexSet::single(x)) out.insert(y);
  }
  return out;
}

VertexSet boundary(const Graph& g, VertexSet s) { return g.closed_neighborhood(s) - s; }

}  // namespace rdom
