#include "rdom/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>

#include "rdom/errors.hpp"

namespace rdom {

namespace {

std::atomic<int> g_fault_order{-1};

void check_limit(const Graph& g, int max_order) {
  if (g.order() > max_order) {
    throw LimitExceeded("order " + std::to_string(g.order()) + " exceeds exact-search limit " +
                        std::to_string(max_order));
  }
}

// A component relabelled into breadth-first order so that closed
// neighbourhoods of early positions are complete early in the search.
struct SearchFrame {
  int n = 0;
  std::vector<Vertex> to_parent;     // position -> vertex of the parent graph
  std::vector<std::uint64_t> closed;  // N[position], in positions
  std::vector<std::uint64_t> reach;   // reach[i] = N[{i..n-1}], reach[n] = 0
  std::uint64_t all = 0;

  VertexSet to_parent_set(std::uint64_t positions) const {
    VertexSet out;
    for (Vertex p : VertexSet(positions)) out.insert(to_parent[p]);
    return out;
  }
};

SearchFrame make_frame(const Subgraph& comp) {
  const Graph& g = comp.graph;
  SearchFrame f;
  f.n = g.order();
  std::vector<Vertex> bfs;
  VertexSet seen;
  for (Vertex start = 0; start < f.n; ++start) {
    if (seen.contains(start)) continue;
    seen.insert(start);
    bfs.push_back(start);
    for (std::size_t head = bfs.size() - 1; head < bfs.size(); ++head) {
      for (Vertex w : g.neighbors(bfs[head]) - seen) {
        seen.insert(w);
        bfs.push_back(w);
      }
    }
  }
  std::vector<int> position(static_cast<std::size_t>(f.n));
  for (int p = 0; p < f.n; ++p) position[bfs[p]] = p;
  f.to_parent.resize(static_cast<std::size_t>(f.n));
  f.closed.resize(static_cast<std::size_t>(f.n));
  for (int p = 0; p < f.n; ++p) {
    f.to_parent[p] = comp.original[bfs[p]];
    std::uint64_t row = std::uint64_t{1} << p;
    for (Vertex w : g.neighbors(bfs[p])) row |= std::uint64_t{1} << position[w];
    f.closed[p] = row;
  }
  f.reach.assign(static_cast<std::size_t>(f.n) + 1, 0);
  for (int p = f.n - 1; p >= 0; --p) f.reach[p] = f.reach[p + 1] | f.closed[p];
  f.all = VertexSet::first(f.n).bits();
  return f;
}

// Minimises 2|S| + |V ∖ N[S]| over candidate sets S of 2-labelled vertices.
class RomanSearch {
 public:
  explicit RomanSearch(const SearchFrame& f) : f_(f) {}

  int value() {
    best_ = f_.n;
    collect_ = false;
    dfs(0, 0, 0, 0);
    return best_;
  }

  std::vector<std::uint64_t> optima(int value) {
    best_ = value;
    collect_ = true;
    found_.clear();
    dfs(0, 0, 0, 0);
    return found_;
  }

 private:
  void dfs(int i, std::uint64_t twos, std::uint64_t dominated, int count) {
    const std::uint64_t decided = (i >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1);
    // Decided vertices that nothing later can dominate must be labelled 1.
    const std::uint64_t stranded = decided & ~dominated & ~f_.reach[i];
    const int bound = 2 * count + std::popcount(stranded);
    if (collect_ ? bound > best_ : bound >= best_) return;
    if (i == f_.n) {
      const int cost = 2 * count + std::popcount(f_.all & ~dominated);
      if (collect_) {
        if (cost == best_) found_.push_back(twos);
      } else if (cost < best_) {
        best_ = cost;
      }
      return;
    }
    dfs(i + 1, twos | (std::uint64_t{1} << i), dominated | f_.closed[i], count + 1);
    dfs(i + 1, twos, dominated, count);
  }

  const SearchFrame& f_;
  int best_ = 0;
  bool collect_ = false;
  std::vector<std::uint64_t> found_;
};

class DominationSearch {
 public:
  explicit DominationSearch(const SearchFrame& f) : f_(f) {}

  int value() {
    best_ = f_.n;
    collect_ = false;
    dfs(0, 0, 0, 0);
    return best_;
  }

  std::vector<std::uint64_t> optima(int value) {
    best_ = value;
    collect_ = true;
    found_.clear();
    dfs(0, 0, 0, 0);
    return found_;
  }

 private:
  void dfs(int i, std::uint64_t chosen, std::uint64_t dominated, int count) {
    const std::uint64_t decided = (i >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1);
    if (decided & ~dominated & ~f_.reach[i]) return;
    const int needed = count + ((f_.all & ~dominated) != 0 ? 1 : 0);
    if (collect_ ? needed > best_ : needed >= best_) return;
    if (i == f_.n) {
      if (collect_) {
        found_.push_back(chosen);
      } else {
        best_ = count;
      }
      return;
    }
    dfs(i + 1, chosen | (std::uint64_t{1} << i), dominated | f_.closed[i], count + 1);
    dfs(i + 1, chosen, dominated, count);
  }

  const SearchFrame& f_;
  int best_ = 0;
  bool collect_ = false;
  std::vector<std::uint64_t> found_;
};

void sort_lex(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end(), lex_less); }

// Unions of one pick from each list.
std::vector<VertexSet> cartesian_unions(const std::vector<std::vector<VertexSet>>& per_component) {
  std::vector<VertexSet> out{VertexSet()};
  for (const auto& options : per_component) {
    std::vector<VertexSet> next;
    next.reserve(out.size() * options.size());
    for (VertexSet partial : out)
      for (VertexSet pick : options) next.push_back(partial | pick);
    out = std::move(next);
  }
  sort_lex(out);
  return out;
}

std::vector<VertexSet> to_parent_sets(const SearchFrame& f, const std::vector<std::uint64_t>& found) {
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (std::uint64_t s : found) out.push_back(f.to_parent_set(s));
  return out;
}

// Per component: all S maximising |N[S]| - 2|S|, by plain enumeration.
struct DifferentialScan {
  const Graph& g;
  int best = 0;
  std::vector<VertexSet> sets;

  void scan(const std::vector<Vertex>& verts, std::size_t i, VertexSet s, VertexSet closed) {
    if (i == verts.size()) {
      const int value = closed.size() - 2 * s.size();
      if (sets.empty() || value > best) {
        best = value;
        sets.clear();
      }
      if (value == best) sets.push_back(s);
      return;
    }
    scan(verts, i + 1, s | VertexSet::single(verts[i]), closed | g.closed_neighbors(verts[i]));
    scan(verts, i + 1, s, closed);
  }
};

}  // namespace

bool operator<(const RomanFunction& a, const RomanFunction& b) {
  if (a.v2 != b.v2) return lex_less(a.v2, b.v2);
  if (a.v1 != b.v1) return lex_less(a.v1, b.v1);
  return lex_less(a.v0, b.v0);
}

RomanFunction roman_function_from_twos(const Graph& g, VertexSet twos) {
  const VertexSet reached = g.closed_neighborhood(twos);
  return RomanFunction{g.order(), reached - twos, g.vertices() - reached, twos};
}

RdfCheck validate_rdf(const Graph& g, const RomanFunction& f) {
  const bool disjoint = !f.v0.intersects(f.v1) && !f.v0.intersects(f.v2) && !f.v1.intersects(f.v2);
  if (f.order != g.order() || !disjoint || (f.v0 | f.v1 | f.v2) != g.vertices()) {
    throw std::invalid_argument("validate_rdf: labels do not partition the vertex set");
  }
  for (Vertex v : f.v0) {
    if (!g.neighbors(v).intersects(f.v2)) return RdfCheck{false, v};
  }
  return RdfCheck{true, std::nullopt};
}

bool is_dominating(const Graph& g, VertexSet d) { return g.closed_neighborhood(d) == g.vertices(); }

int domination_number(const Graph& g, int max_order) {
  check_limit(g, max_order);
  int total = 0;
  for (const Subgraph& comp : connected_components(g)) {
    const SearchFrame f = make_frame(comp);
    total += DominationSearch(f).value();
  }
  return total;
}

DominationSummary minimum_dominating_sets(const Graph& g, int max_order) {
  check_limit(g, max_order);
  DominationSummary out;
  std::vector<std::vector<VertexSet>> per_component;
  for (const Subgraph& comp : connected_components(g)) {
    const SearchFrame f = make_frame(comp);
    DominationSearch search(f);
    const int value = search.value();
    out.gamma += value;
    per_component.push_back(to_parent_sets(f, search.optima(value)));
  }
  out.all_min_sets = cartesian_unions(per_component);
  out.unique = out.all_min_sets.size() == 1;
  return out;
}

bool tree_unique_gamma_structural(const Graph& t, VertexSet d) {
  if (!is_tree(t) || t.order() < 3) throw std::invalid_argument("tree_unique_gamma_structural: need a tree of order >= 3");
  if (!is_dominating(t, d)) throw std::invalid_argument("tree_unique_gamma_structural: set does not dominate");
  for (Vertex v : d) {
    const VertexSet pn = private_neighbors(t, v, d);
    bool found = false;
    for (Vertex a : pn) {
      if (!(pn - t.closed_neighbors(a)).empty()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

int roman_domination_number(const Graph& g, int max_order) {
  check_limit(g, max_order);
  int total = 0;
  for (const Subgraph& comp : connected_components(g)) {
    const SearchFrame f = make_frame(comp);
    total += RomanSearch(f).value();
  }
  if (g.order() == g_fault_order.load(std::memory_order_relaxed)) ++total;
  return total;
}

std::vector<RomanFunction> gamma_r_functions(const Graph& g, int max_order) {
  check_limit(g, max_order);
  std::vector<std::vector<VertexSet>> per_component;
  for (const Subgraph& comp : connected_components(g)) {
    const SearchFrame f = make_frame(comp);
    RomanSearch search(f);
    per_component.push_back(to_parent_sets(f, search.optima(search.value())));
  }
  std::vector<RomanFunction> out;
  for (VertexSet twos : cartesian_unions(per_component)) out.push_back(roman_function_from_twos(g, twos));
  std::sort(out.begin(), out.end());
  return out;
}

int differential_value(const Graph& g, int max_order) {
  check_limit(g, max_order);
  int total = 0;
  for (const Subgraph& comp : connected_components(g)) {
    DifferentialScan scan{g, 0, {}};
    scan.scan(comp.original, 0, VertexSet(), VertexSet());
    total += scan.best;
  }
  return total;
}

std::vector<VertexSet> differential_sets(const Graph& g, int max_order) {
  check_limit(g, max_order);
  std::vector<std::vector<VertexSet>> per_component;
  for (const Subgraph& comp : connected_components(g)) {
    DifferentialScan scan{g, 0, {}};
    scan.scan(comp.original, 0, VertexSet(), VertexSet());
    per_component.push_back(std::move(scan.sets));
  }
  return cartesian_unions(per_component);
}

std::vector<VertexSet> efficient_dominating_sets(const Graph& g, int max_order) {
  check_limit(g, max_order);
  std::vector<VertexSet> out;
  // The smallest uncovered vertex is covered by exactly one member of N[u],
  // so each efficient dominating set is reached along a single branch.
  auto extend = [&](auto&& self, VertexSet chosen, VertexSet covered) -> void {
    const VertexSet open = g.vertices() - covered;
    if (open.empty()) {
      out.push_back(chosen);
      return;
    }
    for (Vertex s : g.closed_neighbors(open.front())) {
      if (!g.closed_neighbors(s).intersects(covered)) {
        self(self, chosen | VertexSet::single(s), covered | g.closed_neighbors(s));
      }
    }
  };
  extend(extend, VertexSet(), VertexSet());
  sort_lex(out);
  return out;
}

namespace fault {

void arm_gamma_r_off_by_one(int target_order) { g_fault_order.store(target_order); }

void disarm() { g_fault_order.store(-1); }

}  // namespace fault

}  // namespace rdom
