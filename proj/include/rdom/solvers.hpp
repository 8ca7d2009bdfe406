#pragma once

#include <optional>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

// Exact-search order limits. Exceeding the limit passed to a solver raises
// LimitExceeded; there is no approximate fallback.
inline constexpr int kSingleGraphLimit = 20;
inline constexpr int kSweepLimit = 16;

// f = (V0; V1; V2) with V0 ∪ V1 ∪ V2 = V(G).
struct RomanFunction {
  int order = 0;
  VertexSet v0;
  VertexSet v1;
  VertexSet v2;

  int weight() const { return v1.size() + 2 * v2.size(); }
  int value(Vertex v) const { return v2.contains(v) ? 2 : v1.contains(v) ? 1 : 0; }

  friend bool operator==(const RomanFunction&, const RomanFunction&) = default;
};

// Deterministic order: by V2, then V1, as sorted vertex lists.
bool operator<(const RomanFunction& a, const RomanFunction& b);

// The function (V ∖ N[S]; ... ) read off a candidate V2 set: V2 = S,
// V0 = B(S), V1 = everything S does not reach.
RomanFunction roman_function_from_twos(const Graph& g, VertexSet twos);

struct RdfCheck {
  bool valid = false;
  // A 0-labelled vertex with no 2-labelled neighbour.
  std::optional<Vertex> witness;
};

// Throws std::invalid_argument if f does not partition V(G).
RdfCheck validate_rdf(const Graph& g, const RomanFunction& f);

struct DominationSummary {
  int gamma = 0;
  std::vector<VertexSet> all_min_sets;
  bool unique = false;
};

bool is_dominating(const Graph& g, VertexSet d);

int domination_number(const Graph& g, int max_order = kSingleGraphLimit);
// Every minimum dominating set once, in lex order.
DominationSummary minimum_dominating_sets(const Graph& g, int max_order = kSingleGraphLimit);

// Every vertex of D has at least two pairwise non-adjacent D-private
// neighbours. Requires a tree of order >= 3 and a dominating D.
bool tree_unique_gamma_structural(const Graph& t, VertexSet d);

int roman_domination_number(const Graph& g, int max_order = kSingleGraphLimit);
// Every γ_R-function once, ordered by operator<.
std::vector<RomanFunction> gamma_r_functions(const Graph& g, int max_order = kSingleGraphLimit);

// max over S of |B(S)| - |S|, by exhaustive subset enumeration.
int differential_value(const Graph& g, int max_order = kSingleGraphLimit);
// All S attaining the maximum, in lex order.
std::vector<VertexSet> differential_sets(const Graph& g, int max_order = kSingleGraphLimit);

// Sets whose closed neighbourhoods partition V(G), in lex order.
std::vector<VertexSet> efficient_dominating_sets(const Graph& g, int max_order = kSingleGraphLimit);

namespace fault {

// Test hook: while armed, roman_domination_number reports one more than
// the true value on every graph of the target order. Thread-safe.
void arm_gamma_r_off_by_one(int target_order);
void disarm();

}  // namespace fault

}  // namespace rdom
