#include "rdom/explore.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "rdom/classifier.hpp"
#include "rdom/constructions.hpp"
#include "rdom/enumeration.hpp"
#include "rdom/graph6.hpp"

namespace rdom::explore {

std::vector<Graph> unicyclic_members(int n) {
  std::vector<Graph> out;
  for (Graph& g : unicyclic_graphs(n).collect())
    if (in_class_R_UVR(g, kSweepLimit)) out.push_back(std::move(g));
  return out;
}

SizeTable max_sizes(int n) {
  if (n < 1 || n > kMaxTreeOrder) throw std::invalid_argument("max_sizes: order must be in 1..16");
  SizeTable table;
  table.order = n;
  std::map<int, SizeRow> rows;
  auto consider = [&](const Graph& g) {
    if (!in_class_R_UVR(g, kSweepLimit)) return;
    const int r = roman_domination_number(g, kSweepLimit);
    SizeRow& row = rows[r];
    row.gamma_r = r;
    ++row.members;
    if (row.witness.empty() || g.size() > row.max_edges) {
      row.max_edges = g.size();
      row.witness = write_graph6(g);
    }
  };
  if (n <= kMaxGraphOrder) {
    table.exhaustive = true;
    table.source = "all graphs";
    for (const Graph& g : all_graphs(n)) consider(g);
  } else {
    table.source = "trees, unicyclic graphs and named constructions";
    auto trees = free_trees(n);
    while (auto item = trees.next()) consider(item->graph);
    if (n <= kMaxUnicyclicOrder) {
      auto uni = unicyclic_graphs(n);
      while (auto item = uni.next()) consider(item->graph);
    }
    consider(path_graph(n));
    consider(cycle_graph(n));
    consider(complete_graph(n));
    consider(join_graph(complete_graph(2), edgeless_graph(n - 2)));
    for (int m = (n + 1) / 2; m < n; ++m) consider(complete_bipartite(m, n - m));
    if (n % 2 == 0 && n / 2 >= 4) consider(two_cliques_bridge(n / 2));
    if (n == 8) {
      consider(cube_graph());
      consider(figure3_graph());
    }
    if (n == 12) consider(icosahedron_graph());
  }
  for (auto& [r, row] : rows) table.rows.push_back(row);
  return table;
}

}  // namespace rdom::explore
