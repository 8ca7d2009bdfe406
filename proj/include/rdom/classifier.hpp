#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/solvers.hpp"

namespace rdom {

enum class RemovalEffect { kDecreased, kUnchanged, kIncreased };

std::string_view to_string(RemovalEffect e);

// γ_R(G - v) compared with γ_R(G). A decrease by more than one throws
// BoundViolation.
RemovalEffect removal_effect(const Graph& g, Vertex v, int max_order = kSingleGraphLimit);

bool in_class_R_UVR(const Graph& g, int max_order = kSingleGraphLimit);
bool in_class_R_CVR(const Graph& g, int max_order = kSingleGraphLimit);
// Vertex-removal classes on the differential, computed through
// differential_value. Deleting a vertex also removes one from |V|, so the
// stable case is ∂(G - v) = ∂(G) - 1; that is what these test.
bool in_class_dUVR(const Graph& g, int max_order = kSingleGraphLimit);
bool in_class_dCVR(const Graph& g, int max_order = kSingleGraphLimit);
// The same quantifiers with plain equality ∂(G - v) = ∂(G). These do not
// line up with the γ_R classes (P_6 is stable for γ_R but not here) and are
// kept for reporting only.
bool in_class_dUVR_literal(const Graph& g, int max_order = kSingleGraphLimit);
bool in_class_dCVR_literal(const Graph& g, int max_order = kSingleGraphLimit);

bool is_roman(const Graph& g, int max_order = kSingleGraphLimit);
bool is_URD(const Graph& g, int max_order = kSingleGraphLimit);
// No γ_R-function labels v with 1.
bool vertex_never_one(const Graph& g, Vertex v, int max_order = kSingleGraphLimit);

// min over paths x,y,z of deg x + deg y + deg z - |N(x) ∩ N(y)| - 3, and over
// vertices that are never labelled 1, of their degree.
int bondage_upper_bound(const Graph& g, int max_order = kSingleGraphLimit);

// Smallest |F| with γ_R(G - F) > γ_R(G). Subsets are tried by increasing
// size, lexicographically within a size. Requires Δ(G) >= 2. `cap`
// defaults to bondage_upper_bound; running past it throws BoundViolation.
int roman_bondage_number(const Graph& g, std::optional<int> cap = std::nullopt,
                         int max_order = kSingleGraphLimit);

struct ClassReport {
  int order = 0;
  int size = 0;
  int gamma = 0;
  int gamma_r = 0;
  int differential = 0;
  bool is_roman = false;
  bool in_R_UVR = false;
  bool in_R_CVR = false;
  bool in_dUVR = false;
  bool in_dCVR = false;
  bool in_dUVR_literal = false;
  bool in_dCVR_literal = false;
  bool is_URD = false;
  // Present when Δ(G) >= 2.
  std::optional<int> bondage;
  std::vector<RemovalEffect> per_vertex_effect;
};

ClassReport classify(const Graph& g, int max_order = kSingleGraphLimit);

}  // namespace rdom
