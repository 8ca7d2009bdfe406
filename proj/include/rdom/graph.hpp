#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "rdom/vertex_set.hpp"

namespace rdom {

// Unordered vertex pair, stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on vertices 0..order-1. Immutable once built.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  // Edgeless graph.
  explicit Graph(int order);

  // Throws std::invalid_argument on loops, out-of-range endpoints and
  // repeated edges.
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // rows[v] is the open neighbourhood mask of v. Must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<std::uint64_t> rows);

  int order() const { return order_; }
  int size() const;

  VertexSet vertices() const { return VertexSet::first(order_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighbors(Vertex v) const { return VertexSet(adj_[v]) | VertexSet::single(v); }
  // N[S]
  VertexSet closed_neighborhood(VertexSet s) const;
  bool adjacent(Vertex a, Vertex b) const { return (adj_[a] >> b) & 1U; }
  bool contains(Vertex v) const { return v >= 0 && v < order_; }
  bool has_edge(const Edge& e) const { return contains(e.u) && contains(e.v) && adjacent(e.u, e.v); }

  int degree(Vertex v) const;
  // 0 for the empty graph.
  int min_degree() const;
  int max_degree() const;
  // Non-increasing.
  std::vector<int> degree_sequence() const;
  // Lexicographic order.
  std::vector<Edge> edges() const;

  std::span<const std::uint64_t> rows() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int order_ = 0;
  std::vector<std::uint64_t> adj_;
};

// A graph together with the ids its vertices had in the graph it came from:
// vertex i of `graph` is vertex original[i] of the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;

  // Inverse lookup; -1 when `parent_vertex` was dropped.
  Vertex local(Vertex parent_vertex) const;
};

Subgraph induced_subgraph(const Graph& g, VertexSet keep);
// Remaining ids are renumbered contiguously in increasing order.
Subgraph delete_vertex(const Graph& g, Vertex v);
Subgraph delete_vertices(const Graph& g, VertexSet removed);
// Vertex ids are unchanged. Every edge must be present.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);
Graph delete_edges(const Graph& g, std::initializer_list<Edge> removed);
// G - E_v: v stays as an isolated vertex.
Graph isolate_vertex(const Graph& g, Vertex v);

// Components ordered by their smallest vertex.
std::vector<Subgraph> connected_components(const Graph& g);
// The empty graph has no components and is not connected.
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_independent(const Graph& g, VertexSet s);

// pn[x, X] = { y : N[y] ∩ X = {x} }. Requires x ∈ X.
VertexSet private_neighbors(const Graph& g, Vertex x, VertexSet xs);
// Vertices outside S with a neighbour in S.
VertexSet boundary(const Graph& g, VertexSet s);

}  // namespace rdom
