#pragma once

#include <span>
#include <string>

#include "rdom/graph.hpp"

namespace rdom {

// Largest order accepted by the brute-force canonicalizer for non-trees.
inline constexpr int kCanonicalMaxOrder = 10;

// Isomorphism-invariant key: equal keys <=> isomorphic graphs.
//
// Trees of any order get a centre-rooted nested-parenthesis code. Other
// graphs get the graph6 string of the relabelling whose upper-triangle bit
// string is lexicographically smallest, searched over the permutations that
// respect a degree-based vertex partition. Throws LimitExceeded for
// non-trees above kCanonicalMaxOrder.
std::string canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

// Brute-force key for any graph up to kCanonicalMaxOrder, trees included.
std::string canonical_graph6(const Graph& g);

// Canonical code for a tree whose vertices carry one-character labels; with
// empty labels this is the unlabelled code. Requires is_tree(t).
std::string tree_canonical_code(const Graph& t, std::span<const char> labels = {});

}  // namespace rdom
