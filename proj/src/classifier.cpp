#include "rdom/classifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rdom/errors.hpp"

namespace rdom {

namespace {

bool advance_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

template <typename Pred>
bool for_all_vertices(const Graph& g, Pred pred) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!pred(v)) return false;
  return true;
}

}  // namespace

std::string_view to_string(RemovalEffect e) {
  switch (e) {
    case RemovalEffect::kDecreased:
      return "decreased";
    case RemovalEffect::kUnchanged:
      return "unchanged";
    case RemovalEffect::kIncreased:
      return "increased";
  }
  return "?";
}

RemovalEffect removal_effect(const Graph& g, Vertex v, int max_order) {
  const int base = roman_domination_number(g, max_order);
  const int after = roman_domination_number(delete_vertex(g, v).graph, max_order);
  if (after < base) {
    if (after != base - 1) {
      throw BoundViolation("removing vertex " + std::to_string(v) + " dropped the Roman domination number by " +
                           std::to_string(base - after));
    }
    return RemovalEffect::kDecreased;
  }
  return after == base ? RemovalEffect::kUnchanged : RemovalEffect::kIncreased;
}

bool in_class_R_UVR(const Graph& g, int max_order) {
  const int base = roman_domination_number(g, max_order);
  return for_all_vertices(g, [&](Vertex v) { return roman_domination_number(delete_vertex(g, v).graph, max_order) == base; });
}

bool in_class_R_CVR(const Graph& g, int max_order) {
  const int base = roman_domination_number(g, max_order);
  return for_all_vertices(g, [&](Vertex v) { return roman_domination_number(delete_vertex(g, v).graph, max_order) != base; });
}

bool in_class_dUVR(const Graph& g, int max_order) {
  const int base = differential_value(g, max_order);
  return for_all_vertices(g, [&](Vertex v) { return differential_value(delete_vertex(g, v).graph, max_order) == base - 1; });
}

bool in_class_dCVR(const Graph& g, int max_order) {
  const int base = differential_value(g, max_order);
  return for_all_vertices(g, [&](Vertex v) { return differential_value(delete_vertex(g, v).graph, max_order) != base - 1; });
}

bool in_class_dUVR_literal(const Graph& g, int max_order) {
  const int base = differential_value(g, max_order);
  return for_all_vertices(g, [&](Vertex v) { return differential_value(delete_vertex(g, v).graph, max_order) == base; });
}

bool in_class_dCVR_literal(const Graph& g, int max_order) {
  const int base = differential_value(g, max_order);
  return for_all_vertices(g, [&](Vertex v) { return differential_value(delete_vertex(g, v).graph, max_order) != base; });
}

bool is_roman(const Graph& g, int max_order) {
  return roman_domination_number(g, max_order) == 2 * domination_number(g, max_order);
}

bool is_URD(const Graph& g, int max_order) { return gamma_r_functions(g, max_order).size() == 1; }

bool vertex_never_one(const Graph& g, Vertex v, int max_order) {
  if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  const auto functions = gamma_r_functions(g, max_order);
  return std::none_of(functions.begin(), functions.end(), [v](const RomanFunction& f) { return f.v1.contains(v); });
}

int bondage_upper_bound(const Graph& g, int max_order) {
  int best = g.size();
  for (Vertex y = 0; y < g.order(); ++y) {
    for (Vertex x : g.neighbors(y)) {
      for (Vertex z : g.neighbors(y)) {
        if (z == x) continue;
        const int common = (g.neighbors(x) & g.neighbors(y)).size();
        best = std::min(best, g.degree(x) + g.degree(y) + g.degree(z) - common - 3);
      }
    }
  }
  const auto functions = gamma_r_functions(g, max_order);
  VertexSet ever_one;
  for (const auto& f : functions) ever_one |= f.v1;
  for (Vertex v : g.vertices() - ever_one) best = std::min(best, g.degree(v));
  return best;
}

int roman_bondage_number(const Graph& g, std::optional<int> cap, int max_order) {
  if (g.max_degree() < 2) throw std::invalid_argument("Roman bondage number needs maximum degree >= 2");
  const int base = roman_domination_number(g, max_order);
  const int limit = cap.value_or(bondage_upper_bound(g, max_order));
  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (int k = 1; k <= std::min(limit, m); ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      std::vector<Edge> removed;
      for (int i : idx) removed.push_back(edges[i]);
      if (roman_domination_number(delete_edges(g, removed), max_order) > base) return k;
    } while (advance_combination(idx, m));
  }
  throw BoundViolation("no edge set of size <= " + std::to_string(limit) + " raises the Roman domination number");
}

ClassReport classify(const Graph& g, int max_order) {
  ClassReport r;
  r.order = g.order();
  r.size = g.size();
  r.gamma = domination_number(g, max_order);
  r.gamma_r = roman_domination_number(g, max_order);
  r.differential = differential_value(g, max_order);
  r.is_roman = r.gamma_r == 2 * r.gamma;
  r.is_URD = is_URD(g, max_order);
  for (Vertex v = 0; v < g.order(); ++v) r.per_vertex_effect.push_back(removal_effect(g, v, max_order));
  r.in_R_UVR = std::all_of(r.per_vertex_effect.begin(), r.per_vertex_effect.end(),
                           [](RemovalEffect e) { return e == RemovalEffect::kUnchanged; });
  r.in_R_CVR = std::none_of(r.per_vertex_effect.begin(), r.per_vertex_effect.end(),
                            [](RemovalEffect e) { return e == RemovalEffect::kUnchanged; });
  r.in_dUVR = in_class_dUVR(g, max_order);
  r.in_dCVR = in_class_dCVR(g, max_order);
  r.in_dUVR_literal = in_class_dUVR_literal(g, max_order);
  r.in_dCVR_literal = in_class_dCVR_literal(g, max_order);
  if (g.max_degree() >= 2) r.bondage = roman_bondage_number(g, std::nullopt, max_order);
  return r;
}

}  // namespace rdom
