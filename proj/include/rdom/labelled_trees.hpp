#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/solvers.hpp"

namespace rdom {

enum class Status : char { A = 'A', B = 'B', C = 'C' };

// A tree with a status on every vertex, stored densely by vertex id.
class LabelledTree {
 public:
  // Throws std::invalid_argument unless `tree` is a tree and `status`
  // covers every vertex.
  LabelledTree(Graph tree, std::vector<Status> status);

  const Graph& tree() const { return tree_; }
  int order() const { return tree_.order(); }
  Status status(Vertex v) const { return status_[v]; }
  const std::vector<Status>& statuses() const { return status_; }
  VertexSet with_status(Status s) const;

  // "A B C" word in vertex order.
  std::string status_string() const;

  friend bool operator==(const LabelledTree&, const LabelledTree&) = default;

 private:
  Graph tree_;
  std::vector<Status> status_;
};

// "<graph6> <status string>"
std::string serialize(const LabelledTree& t);
LabelledTree parse_labelled_tree(std::string_view line);

// Which structural clauses fail: S_B independent and dominating with exactly
// two A-neighbours per B vertex forming its private neighbourhood; each A
// vertex has exactly one B neighbour and |S_A| = 2|S_B|; each C vertex has
// at least two B neighbours. Empty when all hold.
std::vector<std::string> structural_violations(const LabelledTree& t);

// P_3 as 0 - 1 - 2; leaves A, centre B.
LabelledTree base_k12();

// O1: path x-y-z plus edge ux, status(u) ∈ {A, C}. New ids x, y, z = n, n+1, n+2.
LabelledTree apply_o1(const LabelledTree& t, Vertex u);
// O2: star y with leaves x, z, t plus edge ux, status(u) = B.
// New ids x, y, z, t = n .. n+3 with statuses C, B, A, A.
LabelledTree apply_o2(const LabelledTree& t, Vertex u);
// O3: path x-y-z plus edge uy, status(u) = C. New ids x, y, z = n, n+1, n+2.
LabelledTree apply_o3(const LabelledTree& t, Vertex u);
// O4: a fresh labelled R (ids n..n+6, in the order of labelled_r()) plus an
// edge from u to its C vertex n+3, status(u) ∈ {A, C}.
LabelledTree apply_o4(const LabelledTree& t, Vertex u);

// O2 applied to the centre of base_k12(): path 1 - 3 - 4 with leaves 0, 2 on
// vertex 1 and 5, 6 on vertex 4. Statuses A B A C B A A.
LabelledTree labelled_r();

enum class Operation { kO1 = 1, kO2 = 2, kO3 = 3, kO4 = 4 };

std::string_view to_string(Operation op);

LabelledTree apply(const LabelledTree& t, Operation op, Vertex u);
bool can_apply(const LabelledTree& t, Operation op, Vertex u);

struct ScriptStep {
  Operation op;
  // Attachment vertex, in the ids of the tree built so far.
  Vertex at;

  friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};

using BuildScript = std::vector<ScriptStep>;

// Runs the steps starting from base_k12().
LabelledTree replay(const BuildScript& script);

struct TFamily {
  // Ordered by order, then canonical form of the tree.
  std::vector<LabelledTree> members;
  // Same tree reached with two different labellings; always empty unless
  // the labelling is not determined by the tree.
  std::vector<std::string> labelling_conflicts;
  // Candidates that were isomorphic to an already generated tree.
  std::size_t duplicates = 0;
};

// Closure of base_k12() under O1-O4 restricted to order <= max_order, one
// member per isomorphism class.
TFamily generate_t_family(int max_order);
std::vector<LabelledTree> generate_script_T(int max_order);

// Solver-backed recognition: T has a unique γ-set D, D is independent and
// |pn[v, D]| = 3 for v ∈ D. The labelling is B on D, C on vertices with two
// or more neighbours in D, A elsewhere. Requires a tree of order >= 3.
std::optional<LabelledTree> recognize_script_T(const Graph& t, int max_order = kSingleGraphLimit);

struct TreeDecomposition {
  BuildScript script;
  // replay(script) with vertex i mapped to input vertex to_input[i]; the map
  // is a graph isomorphism.
  LabelledTree built;
  std::vector<Vertex> to_input;
};

// Structural recognition that peels one gadget at the far end of a
// diametral path per step. Requires a tree of order >= 3.
std::optional<TreeDecomposition> decompose_script_T(const Graph& t);

// f_T = (S_A ∪ S_C; ∅; S_B). Throws std::invalid_argument when a structural
// clause fails.
RomanFunction canonical_gamma_r_function(const LabelledTree& t);

bool in_T1(const LabelledTree& t);

}  // namespace rdom
