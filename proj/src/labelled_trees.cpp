#include "rdom/labelled_trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "rdom/canonical.hpp"
#include "rdom/constructions.hpp"
#include "rdom/graph6.hpp"

namespace rdom {

namespace {

LabelledTree extend(const LabelledTree& t, int added, std::vector<Edge> new_edges, std::vector<Status> new_status) {
  std::vector<Edge> edges = t.tree().edges();
  edges.insert(edges.end(), new_edges.begin(), new_edges.end());
  std::vector<Status> status = t.statuses();
  status.insert(status.end(), new_status.begin(), new_status.end());
  return LabelledTree(Graph::from_edges(t.order() + added, edges), std::move(status));
}

void require_vertex(const LabelledTree& t, Vertex u) {
  if (!t.tree().contains(u)) throw std::invalid_argument("vertex " + std::to_string(u) + " not in tree");
}

[[noreturn]] void wrong_status(Operation op, Vertex u, Status s) {
  throw std::invalid_argument(std::string(to_string(op)) + " cannot attach at vertex " + std::to_string(u) +
                              " with status " + static_cast<char>(s));
}

std::vector<char> label_chars(const LabelledTree& t) {
  std::vector<char> out;
  for (Status s : t.statuses()) out.push_back(static_cast<char>(s));
  return out;
}

// BFS from `start`; the farthest vertex with the smallest id, plus parents.
std::pair<Vertex, std::vector<Vertex>> farthest_from(const Graph& t, Vertex start) {
  std::vector<int> dist(static_cast<std::size_t>(t.order()), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(t.order()), -1);
  std::vector<Vertex> queue{start};
  dist[start] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : t.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  Vertex best = start;
  for (Vertex v = 0; v < t.order(); ++v)
    if (dist[v] > dist[best]) best = v;
  return {best, parent};
}

// x_1 .. x_m
std::vector<Vertex> diametral_path(const Graph& t) {
  const Vertex s = farthest_from(t, 0).first;
  const auto [end, parent] = farthest_from(t, s);
  std::vector<Vertex> path;
  for (Vertex v = end; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<TreeDecomposition> decompose_tree(const Graph& t);

// Removes `gadget`, decomposes the rest and re-attaches the gadget with `op`
// at `anchor`. `gadget_ids` lists the input vertices playing the new ids
// that `op` appends, in order.
std::optional<TreeDecomposition> peel(const Graph& t, VertexSet gadget, Vertex anchor, Operation op,
                                      const std::vector<Vertex>& gadget_ids) {
  const Subgraph rest = delete_vertices(t, gadget);
  if (!is_tree(rest.graph)) return std::nullopt;
  auto inner = decompose_tree(rest.graph);
  if (!inner) return std::nullopt;
  const Vertex anchor_local = rest.local(anchor);
  const auto pos = std::find(inner->to_input.begin(), inner->to_input.end(), anchor_local);
  const Vertex at = static_cast<Vertex>(pos - inner->to_input.begin());
  if (!can_apply(inner->built, op, at)) return std::nullopt;

  std::vector<Vertex> to_input;
  for (Vertex v : inner->to_input) to_input.push_back(rest.original[v]);
  to_input.insert(to_input.end(), gadget_ids.begin(), gadget_ids.end());
  BuildScript script = std::move(inner->script);
  script.push_back({op, at});
  return TreeDecomposition{std::move(script), apply(inner->built, op, at), std::move(to_input)};
}

std::optional<TreeDecomposition> decompose_tree(const Graph& t) {
  if (t.order() < 3) return std::nullopt;
  if (t.order() == 3) {
    const Vertex centre = t.degree(0) == 2 ? 0 : t.degree(1) == 2 ? 1 : 2;
    const std::vector<Vertex> leaves = t.neighbors(centre).to_vector();
    return TreeDecomposition{{}, base_k12(), {leaves[0], centre, leaves[1]}};
  }
  const std::vector<Vertex> path = diametral_path(t);
  const std::size_t m = path.size();
  if (m < 4) return std::nullopt;  // a star with three or more leaves
  const Vertex leaf = path[m - 1];
  const Vertex support = path[m - 2];
  const Vertex b = path[m - 3];
  const Vertex c = path[m - 4];

  if (t.degree(support) == 2) {
    if (t.degree(b) != 2) return std::nullopt;
    VertexSet gadget{b, support, leaf};
    return peel(t, gadget, c, Operation::kO1, {b, support, leaf});
  }

  // Everything hanging off `support` other than b is a leaf, because the
  // path is diametral; exactly two leaves are allowed.
  if (t.degree(support) != 3) return std::nullopt;
  const Vertex other_leaf = (t.neighbors(support) - VertexSet{b, leaf}).front();

  // Off-path neighbours of b: each must be a support with exactly two leaves.
  const VertexSet hanging = t.neighbors(b) - VertexSet::single(c);
  for (Vertex w : hanging) {
    if (t.degree(w) != 3) return std::nullopt;
  }

  if (hanging.size() == 1) {
    VertexSet gadget{b, support, leaf, other_leaf};
    return peel(t, gadget, c, Operation::kO2, {b, support, leaf, other_leaf});
  }
  VertexSet cherry{support, leaf, other_leaf};
  if (auto via_o3 = peel(t, cherry, b, Operation::kO3, {leaf, support, other_leaf})) return via_o3;
  if (hanging.size() == 2) {
    const Vertex z = (hanging - VertexSet::single(support)).front();
    const std::vector<Vertex> z_leaves = (t.neighbors(z) - VertexSet::single(b)).to_vector();
    VertexSet gadget{b, support, leaf, other_leaf, z, z_leaves[0], z_leaves[1]};
    return peel(t, gadget, c, Operation::kO4, {leaf, support, other_leaf, b, z, z_leaves[0], z_leaves[1]});
  }
  return std::nullopt;
}

void require_tree_of_order_3(const Graph& t, const char* who) {
  if (!is_tree(t)) throw std::invalid_argument(std::string(who) + ": input is not a tree");
  if (t.order() < 3) throw std::invalid_argument(std::string(who) + ": tree order must be >= 3");
}

}  // namespace

LabelledTree::LabelledTree(Graph tree, std::vector<Status> status) : tree_(std::move(tree)), status_(std::move(status)) {
  if (!is_tree(tree_)) throw std::invalid_argument("LabelledTree: graph is not a tree");
  if (static_cast<int>(status_.size()) != tree_.order()) {
    throw std::invalid_argument("LabelledTree: status count does not match order");
  }
}

VertexSet LabelledTree::with_status(Status s) const {
  VertexSet out;
  for (Vertex v = 0; v < order(); ++v)
    if (status_[v] == s) out.insert(v);
  return out;
}

std::string LabelledTree::status_string() const {
  std::string out;
  for (Status s : status_) out += static_cast<char>(s);
  return out;
}

std::string serialize(const LabelledTree& t) { return write_graph6(t.tree()) + " " + t.status_string(); }

LabelledTree parse_labelled_tree(std::string_view line) {
  const auto space = line.find(' ');
  if (space == std::string_view::npos) throw std::invalid_argument("labelled tree: expected '<graph6> <statuses>'");
  Graph g = parse_graph6(line.substr(0, space));
  std::vector<Status> status;
  for (char ch : line.substr(space + 1)) {
    if (ch == '\r' || ch == '\n') continue;
    if (ch != 'A' && ch != 'B' && ch != 'C') throw std::invalid_argument(std::string("labelled tree: bad status '") + ch + "'");
    status.push_back(static_cast<Status>(ch));
  }
  return LabelledTree(std::move(g), std::move(status));
}

std::vector<std::string> structural_violations(const LabelledTree& t) {
  const Graph& g = t.tree();
  const VertexSet as = t.with_status(Status::A);
  const VertexSet bs = t.with_status(Status::B);
  const VertexSet cs = t.with_status(Status::C);
  std::vector<std::string> out;
  if (!is_independent(g, bs)) out.push_back("B vertices are not independent");
  if (!is_dominating(g, bs)) out.push_back("B vertices do not dominate");
  for (Vertex v : bs) {
    const VertexSet a_nbrs = g.neighbors(v) & as;
    if (a_nbrs.size() != 2) out.push_back("B vertex " + std::to_string(v) + " has " + std::to_string(a_nbrs.size()) + " A neighbours");
    if (private_neighbors(g, v, bs) != (a_nbrs | VertexSet::single(v))) {
      out.push_back("B vertex " + std::to_string(v) + " private neighbourhood is not its A neighbours plus itself");
    }
  }
  for (Vertex v : as) {
    const int k = (g.neighbors(v) & bs).size();
    if (k != 1) out.push_back("A vertex " + std::to_string(v) + " has " + std::to_string(k) + " B neighbours");
  }
  if (as.size() != 2 * bs.size()) out.push_back("|S_A| != 2|S_B|");
  for (Vertex v : cs) {
    if ((g.neighbors(v) & bs).size() < 2) out.push_back("C vertex " + std::to_string(v) + " has fewer than two B neighbours");
  }
  return out;
}

LabelledTree base_k12() { return LabelledTree(path_graph(3), {Status::A, Status::B, Status::A}); }

LabelledTree apply_o1(const LabelledTree& t, Vertex u) {
  require_vertex(t, u);
  if (t.status(u) == Status::B) wrong_status(Operation::kO1, u, t.status(u));
  const int n = t.order();
  return extend(t, 3, {{u, n}, {n, n + 1}, {n + 1, n + 2}}, {Status::A, Status::B, Status::A});
}

LabelledTree apply_o2(const LabelledTree& t, Vertex u) {
  require_vertex(t, u);
  if (t.status(u) != Status::B) wrong_status(Operation::kO2, u, t.status(u));
  const int n = t.order();
  return extend(t, 4, {{u, n}, {n + 1, n}, {n + 1, n + 2}, {n + 1, n + 3}}, {Status::C, Status::B, Status::A, Status::A});
}

LabelledTree apply_o3(const LabelledTree& t, Vertex u) {
  require_vertex(t, u);
  if (t.status(u) != Status::C) wrong_status(Operation::kO3, u, t.status(u));
  const int n = t.order();
  return extend(t, 3, {{u, n + 1}, {n, n + 1}, {n + 1, n + 2}}, {Status::A, Status::B, Status::A});
}

LabelledTree labelled_r() { return apply_o2(base_k12(), 1); }

LabelledTree apply_o4(const LabelledTree& t, Vertex u) {
  require_vertex(t, u);
  if (t.status(u) == Status::B) wrong_status(Operation::kO4, u, t.status(u));
  const LabelledTree r = labelled_r();
  const int n = t.order();
  std::vector<Edge> edges{{u, n + 3}};
  for (const Edge& e : r.tree().edges()) edges.emplace_back(e.u + n, e.v + n);
  return extend(t, r.order(), std::move(edges), r.statuses());
}

std::string_view to_string(Operation op) {
  switch (op) {
    case Operation::kO1:
      return "O1";
    case Operation::kO2:
      return "O2";
    case Operation::kO3:
      return "O3";
    case Operation::kO4:
      return "O4";
  }
  return "?";
}

bool can_apply(const LabelledTree& t, Operation op, Vertex u) {
  if (!t.tree().contains(u)) return false;
  switch (op) {
    case Operation::kO1:
    case Operation::kO4:
      return t.status(u) != Status::B;
    case Operation::kO2:
      return t.status(u) == Status::B;
    case Operation::kO3:
      return t.status(u) == Status::C;
  }
  return false;
}

LabelledTree apply(const LabelledTree& t, Operation op, Vertex u) {
  switch (op) {
    case Operation::kO1:
      return apply_o1(t, u);
    case Operation::kO2:
      return apply_o2(t, u);
    case Operation::kO3:
      return apply_o3(t, u);
    case Operation::kO4:
      return apply_o4(t, u);
  }
  throw std::invalid_argument("unknown operation");
}

LabelledTree replay(const BuildScript& script) {
  LabelledTree t = base_k12();
  for (const ScriptStep& step : script) t = apply(t, step.op, step.at);
  return t;
}

TFamily generate_t_family(int max_order) {
  if (max_order > Graph::kMaxOrder) throw std::invalid_argument("generate_t_family: order above graph maximum");
  TFamily family;
  // order -> canonical tree code -> (labelled code, member)
  std::map<int, std::map<std::string, std::pair<std::string, LabelledTree>>> layers;
  auto offer = [&](LabelledTree t) {
    if (t.order() > max_order) return;
    std::string key = tree_canonical_code(t.tree());
    const std::vector<char> labels = label_chars(t);
    std::string labelled = tree_canonical_code(t.tree(), labels);
    auto& layer = layers[t.order()];
    auto it = layer.find(key);
    if (it == layer.end()) {
      layer.emplace(std::move(key), std::make_pair(std::move(labelled), std::move(t)));
      return;
    }
    ++family.duplicates;
    if (it->second.first != labelled) family.labelling_conflicts.push_back(serialize(t) + " vs " + serialize(it->second.second));
  };
  offer(base_k12());
  for (int order = 3; order <= max_order; ++order) {
    auto found = layers.find(order);
    if (found == layers.end()) continue;
    for (const auto& [key, entry] : found->second) {
      const LabelledTree& t = entry.second;
      family.members.push_back(t);
      for (Operation op : {Operation::kO1, Operation::kO2, Operation::kO3, Operation::kO4}) {
        for (Vertex u = 0; u < t.order(); ++u) {
          if (can_apply(t, op, u)) offer(apply(t, op, u));
        }
      }
    }
  }
  return family;
}

std::vector<LabelledTree> generate_script_T(int max_order) { return generate_t_family(max_order).members; }

std::optional<LabelledTree> recognize_script_T(const Graph& t, int max_order) {
  require_tree_of_order_3(t, "recognize_script_T");
  const DominationSummary summary = minimum_dominating_sets(t, max_order);
  if (!summary.unique) return std::nullopt;
  const VertexSet d = summary.all_min_sets.front();
  if (!is_independent(t, d)) return std::nullopt;
  for (Vertex v : d)
    if (private_neighbors(t, v, d).size() != 3) return std::nullopt;
  std::vector<Status> status(static_cast<std::size_t>(t.order()), Status::A);
  for (Vertex v = 0; v < t.order(); ++v) {
    if (d.contains(v)) {
      status[v] = Status::B;
    } else if ((t.neighbors(v) & d).size() >= 2) {
      status[v] = Status::C;
    }
  }
  return LabelledTree(t, std::move(status));
}

std::optional<TreeDecomposition> decompose_script_T(const Graph& t) {
  require_tree_of_order_3(t, "decompose_script_T");
  return decompose_tree(t);
}

RomanFunction canonical_gamma_r_function(const LabelledTree& t) {
  const auto problems = structural_violations(t);
  if (!problems.empty()) throw std::invalid_argument("labelled tree violates its invariants: " + problems.front());
  const VertexSet bs = t.with_status(Status::B);
  return RomanFunction{t.order(), t.tree().vertices() - bs, VertexSet(), bs};
}

bool in_T1(const LabelledTree& t) { return t.with_status(Status::C).empty(); }

}  // namespace rdom
