#include "rdom/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rdom/errors.hpp"
#include "rdom/graph6.hpp"

namespace rdom {

namespace {

// Lexicographically smallest upper-triangle bit string over the vertex
// orders that keep invariant cells in a fixed order.
class MinimalRelabelling {
 public:
  explicit MinimalRelabelling(const Graph& g) : g_(g), n_(g.order()) {
    std::vector<std::pair<std::vector<int>, Vertex>> keyed;
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<int> key{g.degree(v)};
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(g.degree(w));
      std::sort(around.begin(), around.end());
      key.insert(key.end(), around.begin(), around.end());
      keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());
    int cell = -1;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) {
        ++cell;
        cells_.emplace_back();
      }
      cells_[cell].insert(keyed[i].second);
      position_cell_.push_back(cell);
    }
    twins_.assign(static_cast<std::size_t>(n_), VertexSet());
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (u != v && (g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u)))
          twins_[u].insert(v);
    perm_.assign(static_cast<std::size_t>(n_), 0);
    columns_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::vector<Vertex> run() {
    search(0, VertexSet());
    return best_perm_;
  }

 private:
  // -1, 0, 1 as columns [0, len) compare with the best found so far. The best
  // keeps shrinking during the search, so this is recomputed, not inherited.
  int compare_prefix(int len) const {
    for (int i = 0; i < len; ++i) {
      if (columns_[i] != best_columns_[i]) return columns_[i] < best_columns_[i] ? -1 : 1;
    }
    return 0;
  }

  void search(int pos, VertexSet placed) {
    if (pos == n_) {
      if (best_perm_.empty() || compare_prefix(n_) < 0) {
        best_perm_ = perm_;
        best_columns_ = columns_;
      }
      return;
    }
    VertexSet tried;
    for (Vertex w : cells_[position_cell_[pos]] - placed) {
      if (twins_[w].intersects(tried)) continue;
      tried.insert(w);
      std::uint64_t column = 0;
      for (int i = 0; i < pos; ++i) column = (column << 1) | (g_.adjacent(perm_[i], w) ? 1U : 0U);
      perm_[pos] = w;
      columns_[pos] = column;
      if (!best_perm_.empty() && compare_prefix(pos + 1) > 0) continue;
      search(pos + 1, placed | VertexSet::single(w));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<VertexSet> cells_;
  std::vector<int> position_cell_;
  std::vector<VertexSet> twins_;
  std::vector<Vertex> perm_;
  std::vector<std::uint64_t> columns_;
  std::vector<Vertex> best_perm_;
  std::vector<std::uint64_t> best_columns_;
};

std::string rooted_code(const Graph& t, Vertex v, Vertex parent, std::span<const char> labels) {
  std::vector<std::string> children;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) children.push_back(rooted_code(t, w, v, labels));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  if (!labels.empty()) out += labels[v];
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

VertexSet tree_centres(const Graph& t) {
  VertexSet alive = t.vertices();
  while (alive.size() > 2) {
    VertexSet leaves;
    for (Vertex v : alive)
      if ((t.neighbors(v) & alive).size() <= 1) leaves.insert(v);
    alive -= leaves;
  }
  return alive;
}

}  // namespace

std::string canonical_graph6(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw LimitExceeded("canonical form supports non-tree graphs up to order " + std::to_string(kCanonicalMaxOrder));
  }
  const std::vector<Vertex> perm = MinimalRelabelling(g).run();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()), 0);
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if (g.adjacent(perm[i], perm[j])) rows[i] |= std::uint64_t{1} << j;
  return write_graph6(Graph::from_adjacency(std::move(rows)));
}

std::string tree_canonical_code(const Graph& t, std::span<const char> labels) {
  if (!is_tree(t)) throw std::invalid_argument("tree_canonical_code: not a tree");
  if (!labels.empty() && static_cast<int>(labels.size()) != t.order()) {
    throw std::invalid_argument("tree_canonical_code: one label per vertex required");
  }
  std::string best;
  for (Vertex c : tree_centres(t)) {
    std::string code = rooted_code(t, c, -1, labels);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::string canonical_form(const Graph& g) {
  if (is_tree(g)) return "T" + tree_canonical_code(g);
  return "G" + canonical_graph6(g);
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace rdom
