#include "rdom/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>

#include "rdom/canonical.hpp"
#include "rdom/errors.hpp"
#include "rdom/graph6.hpp"

namespace rdom {

namespace {

void require_range(const char* who, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(who) + ": order " + std::to_string(n) + " outside " +
                                std::to_string(lo) + ".." + std::to_string(hi));
  }
}

using Levels = std::vector<int>;

std::vector<Vertex> parents_of(const Levels& level) {
  std::vector<Vertex> parent(level.size(), -1);
  std::vector<Vertex> last_at_depth(level.size() + 1, -1);
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (level[i] > 0) parent[i] = last_at_depth[level[i] - 1];
    last_at_depth[level[i]] = static_cast<Vertex>(i);
  }
  return parent;
}

// Beyer-Hedetniemi successor; false after the star.
bool next_levels(Levels& level) {
  const int n = static_cast<int>(level.size());
  int p = n - 1;
  while (p > 0 && level[p] <= 1) --p;
  if (p == 0) return false;
  int q = p - 1;
  while (level[q] != level[p] - 1) --q;
  for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  return true;
}

// Lexicographically largest level sequence of the tree rooted at `root`.
Levels rooted_sequence(const Graph& t, Vertex root, Vertex from, int depth) {
  std::vector<Levels> children;
  for (Vertex w : t.neighbors(root)) {
    if (w != from) children.push_back(rooted_sequence(t, w, root, depth + 1));
  }
  std::sort(children.begin(), children.end(), std::greater<>());
  Levels out{depth};
  for (const Levels& c : children) out.insert(out.end(), c.begin(), c.end());
  return out;
}

// Keeps one level sequence per free tree: the root must be a centroid, and
// with two centroids the larger of the two rootings wins.
std::optional<Graph> tree_if_canonical_rooting(const Levels& level) {
  const int n = static_cast<int>(level.size());
  const std::vector<Vertex> parent = parents_of(level);
  std::vector<int> subtree(static_cast<std::size_t>(n), 1);
  for (int i = n - 1; i > 0; --i) subtree[parent[i]] += subtree[i];
  Vertex other_centroid = -1;
  for (int i = 1; i < n; ++i) {
    if (parent[i] != 0) continue;
    if (2 * subtree[i] > n) return std::nullopt;
    if (2 * subtree[i] == n) other_centroid = i;
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(parent[i], i);
  Graph t = Graph::from_edges(n, edges);
  if (other_centroid >= 0 && rooted_sequence(t, other_centroid, -1, 0) > level) return std::nullopt;
  return t;
}

std::vector<Graph> sorted_by_canonical(std::map<std::string, Graph>&& by_form) {
  std::vector<Graph> out;
  out.reserve(by_form.size());
  for (auto& [form, g] : by_form) out.push_back(std::move(g));
  return out;
}

InstanceStream from_vector(SourceTag tag, int n, std::vector<Graph> graphs) {
  auto items = std::make_shared<std::vector<Graph>>(std::move(graphs));
  auto pos = std::make_shared<std::size_t>(0);
  return InstanceStream(tag, n, n, [items, pos]() -> std::optional<StreamItem> {
    if (*pos >= items->size()) return std::nullopt;
    return StreamItem{(*items)[(*pos)++], 0};
  });
}

}  // namespace

std::string_view to_string(SourceTag tag) {
  switch (tag) {
    case SourceTag::kGeneratedTrees:
      return "generated-trees";
    case SourceTag::kGeneratedGraphs:
      return "generated-graphs";
    case SourceTag::kGeneratedUnicyclic:
      return "generated-unicyclic";
    case SourceTag::kFile:
      return "file";
  }
  return "?";
}

std::vector<Graph> InstanceStream::collect() {
  std::vector<Graph> out;
  while (auto item = next()) out.push_back(std::move(item->graph));
  return out;
}

InstanceStream free_trees(int n) {
  require_range("free_trees", n, 1, kMaxTreeOrder);
  struct State {
    Levels level;
    bool done = false;
  };
  auto state = std::make_shared<State>();
  for (int i = 0; i < n; ++i) state->level.push_back(i);
  return InstanceStream(SourceTag::kGeneratedTrees, n, n, [state]() -> std::optional<StreamItem> {
    while (!state->done) {
      std::optional<Graph> t = tree_if_canonical_rooting(state->level);
      state->done = !next_levels(state->level);
      if (t) return StreamItem{std::move(*t), 0};
    }
    return std::nullopt;
  });
}

std::vector<Graph> all_graphs(int n) {
  require_range("all_graphs", n, 0, kMaxGraphOrder);
  std::vector<Graph> layer{Graph(0)};
  for (int order = 1; order <= n; ++order) {
    std::map<std::string, Graph> next;
    for (const Graph& g : layer) {
      const std::vector<Edge> base = g.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (order - 1)); ++mask) {
        std::vector<Edge> edges = base;
        for (Vertex v : VertexSet(mask)) edges.emplace_back(v, order - 1);
        Graph h = Graph::from_edges(order, edges);
        next.try_emplace(canonical_form(h), std::move(h));
      }
    }
    layer = sorted_by_canonical(std::move(next));
  }
  return layer;
}

InstanceStream connected_graphs(int n) {
  require_range("connected_graphs", n, 1, kMaxGraphOrder);
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return from_vector(SourceTag::kGeneratedGraphs, n, std::move(out));
}

InstanceStream unicyclic_graphs(int n) {
  require_range("unicyclic_graphs", n, kMinUnicyclicOrder, kMaxUnicyclicOrder);
  std::map<std::string, Graph> found;
  InstanceStream trees = free_trees(n);
  while (auto item = trees.next()) {
    const Graph& t = item->graph;
    const std::vector<Edge> base = t.edges();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (t.adjacent(u, v)) continue;
        std::vector<Edge> edges = base;
        edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        found.try_emplace(canonical_form(g), std::move(g));
      }
    }
  }
  return from_vector(SourceTag::kGeneratedUnicyclic, n, sorted_by_canonical(std::move(found)));
}

InstanceStream read_graph6_stream(std::shared_ptr<std::istream> in) {
  auto line_no = std::make_shared<int>(0);
  return InstanceStream(SourceTag::kFile, 0, Graph::kMaxOrder, [in, line_no]() -> std::optional<StreamItem> {
    std::string line;
    while (std::getline(*in, line)) {
      ++*line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
      constexpr std::string_view kHeader = ">>graph6<<";
      if (line.starts_with(kHeader)) line.erase(0, kHeader.size());
      if (line.empty() || line.front() == '>') continue;
      try {
        return StreamItem{parse_graph6(line), *line_no};
      } catch (const Graph6Error& e) {
        throw Graph6Error(e.what(), *line_no);
      }
    }
    return std::nullopt;
  });
}

InstanceStream read_graph6_stream(const std::string& path) {
  auto in = std::make_shared<std::ifstream>(path);
  if (!*in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(std::shared_ptr<std::istream>(in));
}

}  // namespace rdom
