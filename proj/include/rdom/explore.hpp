#pragma once

#include <string>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom::explore {

// Unicyclic members of R_UVR of order n, 3 <= n <= 10, in canonical order.
std::vector<Graph> unicyclic_members(int n);

struct SizeRow {
  int gamma_r = 0;
  int max_edges = 0;
  // A graph attaining max_edges.
  std::string witness;
  std::size_t members = 0;
};

struct SizeTable {
  int order = 0;
  // True when every graph of this order was examined (order <= 7).
  bool exhaustive = false;
  std::string source;
  std::vector<SizeRow> rows;
};

// Largest size of an R_UVR graph of order n for each value of γ_R seen.
// Above order 7 only trees, unicyclic graphs (order <= 10) and named
// constructions are examined, so rows are lower bounds.
SizeTable max_sizes(int n);

}  // namespace rdom::explore
