// Slow, obviously-correct reference computations used only by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rdom/graph.hpp"

namespace oracle {

using rdom::Graph;
using rdom::Vertex;

// One labelling per vertex, values 0, 1, 2.
using Labelling = std::vector<int>;

inline bool is_rdf(const Graph& g, const Labelling& f) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    bool ok = false;
    for (Vertex w = 0; w < g.order(); ++w)
      if (g.adjacent(v, w) && f[w] == 2) ok = true;
    if (!ok) return false;
  }
  return true;
}

inline int weight(const Labelling& f) { return std::accumulate(f.begin(), f.end(), 0); }

// Calls fn on every labelling in {0,1,2}^n.
template <class Fn>
void for_each_labelling(int n, Fn&& fn) {
  Labelling f(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(f);
    int i = 0;
    while (i < n && f[i] == 2) f[i++] = 0;
    if (i == n) return;
    ++f[i];
  }
}

inline int gamma_r(const Graph& g) {
  int best = 2 * g.order() + 1;
  if (g.order() == 0) return 0;
  for_each_labelling(g.order(), [&](const Labelling& f) {
    if (weight(f) < best && is_rdf(g, f)) best = weight(f);
  });
  return best;
}

inline std::vector<Labelling> gamma_r_labellings(const Graph& g) {
  const int best = gamma_r(g);
  std::vector<Labelling> out;
  if (g.order() == 0) return {Labelling{}};
  for_each_labelling(g.order(), [&](const Labelling& f) {
    if (weight(f) == best && is_rdf(g, f)) out.push_back(f);
  });
  return out;
}

inline bool dominates(const Graph& g, std::uint64_t d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    bool ok = (d >> v) & 1;
    for (Vertex w = 0; w < g.order() && !ok; ++w) ok = g.adjacent(v, w) && ((d >> w) & 1);
    if (!ok) return false;
  }
  return true;
}

// All minimum dominating sets as bitmasks, ascending by mask.
inline std::vector<std::uint64_t> min_dominating_sets(const Graph& g) {
  std::vector<std::uint64_t> out;
  int best = g.order() + 1;
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << g.order()); ++d) {
    if (!dominates(g, d)) continue;
    const int k = __builtin_popcountll(d);
    if (k < best) {
      best = k;
      out.clear();
    }
    if (k == best) out.push_back(d);
  }
  return out;
}

inline int differential(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    int boundary = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((s >> v) & 1) continue;
      for (Vertex w = 0; w < g.order(); ++w)
        if (((s >> w) & 1) && g.adjacent(v, w)) {
          ++boundary;
          break;
        }
    }
    best = std::max(best, boundary - __builtin_popcountll(s));
  }
  return best;
}

inline Graph without_edges(const Graph& g, const std::vector<rdom::Edge>& removed) {
  std::vector<rdom::Edge> kept;
  for (const rdom::Edge& e : g.edges())
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
  return Graph::from_edges(g.order(), kept);
}

// Smallest k such that deleting some k edges raises γ_R; 0 if none up to max_k.
inline int bondage(const Graph& g, int max_k) {
  const int base = gamma_r(g);
  const std::vector<rdom::Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (int k = 1; k <= std::min(max_k, m); ++k) {
    std::vector<bool> pick(static_cast<std::size_t>(m), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<rdom::Edge> removed;
      for (int i = 0; i < m; ++i)
        if (pick[i]) removed.push_back(edges[i]);
      if (gamma_r(without_edges(g, removed)) > base) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

// Minimum upper-triangle word over all n! relabellings.
inline std::string brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string word;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) word += g.adjacent(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || word < best) best = word;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

// Otter's count of free trees via the rooted-tree recurrence.
inline std::vector<std::uint64_t> free_tree_counts(int max_n) {
  std::vector<std::uint64_t> r(static_cast<std::size_t>(max_n + 1), 0);
  if (max_n >= 1) r[1] = 1;
  for (int n = 1; n < max_n; ++n) {
    std::uint64_t sum = 0;
    for (int k = 1; k <= n; ++k) {
      std::uint64_t d_sum = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) d_sum += static_cast<std::uint64_t>(d) * r[d];
      sum += d_sum * r[n - k + 1];
    }
    r[n + 1] = sum / n;
  }
  std::vector<std::uint64_t> f(static_cast<std::size_t>(max_n + 1), 0);
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t pairs = 0;
    for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
    if (n % 2 == 0) pairs -= r[n / 2];
    f[n] = r[n] - pairs / 2;
  }
  return f;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<rdom::Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<rdom::Edge> edges;
  for (const rdom::Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edges(g.order(), edges);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Prüfer decoding; every labelled tree on n >= 2 vertices arises once.
inline Graph tree_from_pruefer(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : code) ++degree[x];
  std::vector<rdom::Edge> edges;
  for (int x : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
