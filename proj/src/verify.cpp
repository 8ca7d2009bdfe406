#include "rdom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "rdom/canonical.hpp"
#include "rdom/classifier.hpp"
#include "rdom/constructions.hpp"
#include "rdom/enumeration.hpp"
#include "rdom/graph6.hpp"
#include "rdom/labelled_trees.hpp"
#include "rdom/solvers.hpp"

namespace rdom::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Exhaustive 3^n labelling scans are used up to this order.
constexpr int kLabellingScanMax = 8;
// Above this order THM-UN looks at minimum dominating sets only.
constexpr int kAllDominatingSetsMax = 12;
// Edges drawn per graph when LEM-MINUSE samples.
constexpr int kSampledEdges = 3;
constexpr int kSampleFromOrder = 7;

std::string describe(const RomanFunction& f) {
  return "(" + to_string(f.v0) + ";" + to_string(f.v1) + ";" + to_string(f.v2) + ")";
}

struct Outcome {
  Verdict verdict = Verdict::kPass;
  std::string witness;
  std::string note;
};

Outcome pass(std::string note = {}) { return {Verdict::kPass, {}, std::move(note)}; }
Outcome fail(std::string witness) { return {Verdict::kFail, std::move(witness), {}}; }
Outcome skip(std::string note) { return {Verdict::kSkip, {}, std::move(note)}; }

// Invariants of one graph, computed on first use and shared by every check
// that runs on it.
class Profile {
 public:
  explicit Profile(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }

  int gamma_r() { return memo(gamma_r_, [&] { return roman_domination_number(g_, kSweepLimit); }); }
  const DominationSummary& domination() {
    return memo(domination_, [&] { return minimum_dominating_sets(g_, kSweepLimit); });
  }
  const std::vector<RomanFunction>& functions() {
    return memo(functions_, [&] { return gamma_r_functions(g_, kSweepLimit); });
  }
  int differential() { return memo(differential_, [&] { return differential_value(g_, kSweepLimit); }); }
  const std::vector<VertexSet>& differential_sets_() {
    return memo(dsets_, [&] { return differential_sets(g_, kSweepLimit); });
  }
  // γ_R(G - v) for every v.
  const std::vector<int>& gamma_r_minus() {
    return memo(minus_, [&] {
      std::vector<int> out;
      for (Vertex v = 0; v < order(); ++v) out.push_back(roman_domination_number(delete_vertex(g_, v).graph, kSweepLimit));
      return out;
    });
  }
  const std::vector<int>& differential_minus() {
    return memo(dminus_, [&] {
      std::vector<int> out;
      for (Vertex v = 0; v < order(); ++v) out.push_back(differential_value(delete_vertex(g_, v).graph, kSweepLimit));
      return out;
    });
  }
  bool r_uvr() {
    const auto& m = gamma_r_minus();
    return std::all_of(m.begin(), m.end(), [&](int x) { return x == gamma_r(); });
  }
  bool r_cvr() {
    const auto& m = gamma_r_minus();
    return std::none_of(m.begin(), m.end(), [&](int x) { return x == gamma_r(); });
  }
  bool d_uvr() {
    const auto& m = differential_minus();
    return std::all_of(m.begin(), m.end(), [&](int x) { return x == differential() - 1; });
  }
  bool d_cvr() {
    const auto& m = differential_minus();
    return std::none_of(m.begin(), m.end(), [&](int x) { return x == differential() - 1; });
  }
  bool d_uvr_literal() {
    const auto& m = differential_minus();
    return std::all_of(m.begin(), m.end(), [&](int x) { return x == differential(); });
  }
  int bondage() { return memo(bondage_, [&] { return roman_bondage_number(g_, std::nullopt, kSweepLimit); }); }

 private:
  template <class T, class Fn>
  const T& memo(std::optional<T>& slot, Fn&& fn) {
    if (!slot) slot = fn();
    return *slot;
  }

  const Graph& g_;
  std::optional<int> gamma_r_;
  std::optional<DominationSummary> domination_;
  std::optional<std::vector<RomanFunction>> functions_;
  std::optional<int> differential_;
  std::optional<std::vector<VertexSet>> dsets_;
  std::optional<std::vector<int>> minus_;
  std::optional<std::vector<int>> dminus_;
  std::optional<int> bondage_;
};

enum class Domain { kGraphs, kTrees, kAllGraphs, kUnicyclic, kFamilies, kTFamily };

std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::kGraphs:
      return "graphs";
    case Domain::kTrees:
      return "trees";
    case Domain::kAllGraphs:
      return "all-graphs";
    case Domain::kUnicyclic:
      return "unicyclic";
    case Domain::kFamilies:
      return "families";
    case Domain::kTFamily:
      return "t-family";
  }
  return "?";
}

struct Instance {
  Graph graph;
  std::string label;
  std::optional<LabelledTree> labelled;
  // Named constructions listed as members of R_UVR.
  bool listed_member = false;
};

// Data shared read-only by all instance checks of one run.
struct Context {
  Limits limits;
  std::set<std::string> t_family_codes;
};

using InstanceBody = std::function<Outcome(Profile&, const Instance&, const Context&)>;
using GlobalBody = std::function<std::vector<std::pair<std::string, Outcome>>(const Context&)>;

struct CheckDef {
  CheckInfo info;
  std::vector<Domain> domains;
  InstanceBody body;
  GlobalBody global;
};

// ---------------------------------------------------------------- checks

bool is_cycle(const Graph& g) { return is_connected(g) && g.min_degree() == 2 && g.max_degree() == 2; }

Outcome check_eq1(Profile& p, const Instance&, const Context&) {
  const int g = p.domination().gamma;
  const int r = p.gamma_r();
  if (g <= r && r <= 2 * g) return pass();
  return fail("gamma=" + std::to_string(g) + " gamma_r=" + std::to_string(r));
}

Outcome check_lem_on(Profile& p, const Instance&, const Context&) {
  const Graph& g = p.graph();
  for (const RomanFunction& f : p.functions()) {
    if (g.closed_neighborhood(f.v2).intersects(f.v1) ) return fail("edge between V1 and V2 in " + describe(f));
    for (const Subgraph& c : connected_components(induced_subgraph(g, f.v1).graph)) {
      if (c.graph.order() > 2) return fail("component of order " + std::to_string(c.graph.order()) + " in V1 of " + describe(f));
    }
  }
  return pass();
}

Outcome check_lem_minus(Profile& p, const Instance&, const Context&) {
  for (Vertex v = 0; v < p.order(); ++v) {
    const int after = p.gamma_r_minus()[v];
    const bool drops = after < p.gamma_r();
    const bool some_one = std::any_of(p.functions().begin(), p.functions().end(),
                                      [&](const RomanFunction& f) { return f.v1.contains(v); });
    if (drops != some_one) return fail("vertex " + std::to_string(v) + ": drop=" + (drops ? "yes" : "no") + " labelled 1=" + (some_one ? "yes" : "no"));
    if (drops && after != p.gamma_r() - 1) return fail("vertex " + std::to_string(v) + ": gamma_r fell by " + std::to_string(p.gamma_r() - after));
  }
  return pass();
}

Outcome check_lem_minuse(Profile& p, const Instance&, const Context&) {
  const Graph& g = p.graph();
  std::vector<Edge> edges = g.edges();
  std::string note;
  if (g.order() >= kSampleFromOrder && static_cast<int>(edges.size()) > kSampledEdges) {
    const std::string key = write_graph6(g);
    std::seed_seq seed(key.begin(), key.end());
    std::mt19937 rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(kSampledEdges);
    std::sort(edges.begin(), edges.end());
    note = "sampled " + std::to_string(kSampledEdges) + " of " + std::to_string(g.size()) + " edges";
  }
  for (const Edge& e : edges) {
    const int after = roman_domination_number(delete_edges(g, {e}), kSweepLimit);
    if (after < p.gamma_r()) return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " lowers gamma_r to " + std::to_string(after));
  }
  return pass(note);
}

Outcome check_thm_r(Profile& p, const Instance&, const Context&) {
  const bool roman = p.gamma_r() == 2 * p.domination().gamma;
  const bool no_ones = std::any_of(p.functions().begin(), p.functions().end(), [](const RomanFunction& f) { return f.v1.empty(); });
  if (roman == no_ones) return pass();
  return fail(std::string("roman=") + (roman ? "yes" : "no") + " function with empty V1=" + (no_ones ? "yes" : "no"));
}

Outcome check_thm_un(Profile& p, const Instance&, const Context&) {
  const Graph& t = p.graph();
  if (t.order() < 3) return skip("order below 3");
  const DominationSummary& dom = p.domination();
  auto agrees = [&](VertexSet d) {
    const bool unique_gamma_set = dom.unique && dom.all_min_sets.front() == d;
    return tree_unique_gamma_structural(t, d) == unique_gamma_set;
  };
  if (t.order() <= kAllDominatingSetsMax) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t.order()); ++bits) {
      const VertexSet d(bits);
      if (is_dominating(t, d) && !agrees(d)) return fail("dominating set " + to_string(d));
    }
    return pass();
  }
  for (VertexSet d : dom.all_min_sets)
    if (!agrees(d)) return fail("dominating set " + to_string(d));
  return pass("minimum dominating sets only");
}

Outcome check_diff_i(Profile& p, const Instance&, const Context&) {
  if (p.gamma_r() + p.differential() == p.order()) return pass();
  return fail("gamma_r=" + std::to_string(p.gamma_r()) + " differential=" + std::to_string(p.differential()));
}

Outcome check_diff_ii(Profile& p, const Instance&, const Context&) {
  const Graph& g = p.graph();
  const auto& dsets = p.differential_sets_();
  std::set<std::uint64_t> d_sets;
  for (VertexSet s : dsets) d_sets.insert(s.bits());
  auto characterised = [&](const RomanFunction& f) { return d_sets.count(f.v2.bits()) && f.v0 == boundary(g, f.v2); };

  if (g.order() <= kLabellingScanMax) {
    // Every RDF: optimal exactly when V2 is a ∂-set and V0 = B(V2).
    const int n = g.order();
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    while (true) {
      RomanFunction f{n, {}, {}, {}};
      for (Vertex v = 0; v < n; ++v) (label[v] == 0 ? f.v0 : label[v] == 1 ? f.v1 : f.v2).insert(v);
      if (validate_rdf(g, f).valid && (f.weight() == p.gamma_r()) != characterised(f)) return fail("function " + describe(f));
      int i = 0;
      while (i < n && label[i] == 2) label[i++] = 0;
      if (i == n) break;
      ++label[i];
    }
    return pass();
  }
  std::vector<RomanFunction> from_sets;
  for (VertexSet s : dsets) from_sets.push_back(roman_function_from_twos(g, s));
  std::sort(from_sets.begin(), from_sets.end());
  for (const RomanFunction& f : from_sets)
    if (!validate_rdf(g, f).valid) return fail("not an RDF: " + describe(f));
  for (const RomanFunction& f : p.functions())
    if (!characterised(f)) return fail("function " + describe(f));
  if (from_sets != p.functions()) return fail("differential sets and gamma_r-functions differ in number or content");
  return pass("enumerative");
}

Outcome check_obs_disc(Profile& p, const Instance&, const Context&) {
  bool all = true;
  for (const Subgraph& c : connected_components(p.graph())) all = all && in_class_R_UVR(c.graph, kSweepLimit);
  if (all == p.r_uvr()) return pass();
  return fail(std::string("graph in R_UVR=") + (p.r_uvr() ? "yes" : "no") + " all components=" + (all ? "yes" : "no"));
}

Outcome check_obs_pn3(Profile& p, const Instance&, const Context&) {
  if (!p.r_uvr()) return skip("not in R_UVR");
  const Graph& g = p.graph();
  const int gamma = p.domination().gamma;
  if (p.gamma_r() != 2 * gamma) return fail("not Roman");
  for (const RomanFunction& f : p.functions()) {
    if (!f.v1.empty()) return fail("V1 non-empty in " + describe(f));
    if (f.v2.size() != gamma || !is_dominating(g, f.v2)) return fail("V2 not a gamma-set in " + describe(f));
    for (Vertex v : f.v2)
      if (private_neighbors(g, v, f.v2).size() < 3) return fail("vertex " + std::to_string(v) + " has fewer than 3 private neighbours in " + describe(f));
  }
  for (VertexSet d : p.domination().all_min_sets) {
    const RomanFunction h{g.order(), g.vertices() - d, VertexSet(), d};
    if (!validate_rdf(g, h).valid || h.weight() != p.gamma_r()) return fail("gamma-set " + to_string(d) + " does not give a gamma_r-function");
  }
  return pass();
}

Outcome check_prop_3v2(Profile& p, const Instance&, const Context&) {
  const Graph& g = p.graph();
  if (!is_connected(g) || !p.r_uvr()) return skip("not a connected member of R_UVR");
  const int n = g.order();
  if (3 * p.gamma_r() > 2 * n) return fail("gamma_r=" + std::to_string(p.gamma_r()) + " exceeds 2n/3");
  const bool equality = 3 * p.gamma_r() == 2 * n;
  const std::vector<VertexSet> eds = efficient_dominating_sets(g, kSweepLimit);
  auto degree_two = [&](VertexSet s) {
    for (Vertex v : s)
      if (g.degree(v) != 2) return false;
    return true;
  };
  if (equality) {
    for (const RomanFunction& f : p.functions()) {
      if (std::find(eds.begin(), eds.end(), f.v2) == eds.end()) return fail("V2 not efficient in " + describe(f));
      if (!degree_two(f.v2)) return fail("V2 has a vertex of degree other than 2 in " + describe(f));
    }
  }
  for (VertexSet d : eds)
    if (degree_two(d) && !equality) return fail("efficient dominating set " + to_string(d) + " of degree-2 vertices without equality");
  if (g.min_degree() >= 3) {
    if (equality) return fail("equality with min degree >= 3");
    return {Verdict::kInfo, {}, "min degree >= 3, gamma_R=" + std::to_string(p.gamma_r()) + " < 2n/3"};
  }
  if (equality && !is_cycle(g)) return {Verdict::kInfo, {}, "equality, not a cycle"};
  return pass(equality ? "equality" : "");
}

Outcome check_prop_02(Profile& p, const Instance&, const Context&) {
  const Graph& g = p.graph();
  int tested = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool never_one = std::none_of(p.functions().begin(), p.functions().end(),
                                        [&](const RomanFunction& f) { return f.v1.contains(v); });
    if (!never_one) continue;
    ++tested;
    const int after = roman_domination_number(isolate_vertex(g, v), kSweepLimit);
    if (after <= p.gamma_r()) return fail("vertex " + std::to_string(v) + ": removing its edges leaves gamma_r at " + std::to_string(after));
  }
  if (tested == 0) return skip("every vertex is labelled 1 by some gamma_r-function");
  return pass();
}

Outcome check_cor_uvrbon(Profile& p, const Instance&, const Context&) {
  const Graph& g = p.graph();
  if (!p.r_uvr() || g.max_degree() < 2) return skip("not in R_UVR or max degree below 2");
  const int b = p.bondage();
  if (b > g.min_degree()) return fail("b_R=" + std::to_string(b) + " exceeds min degree " + std::to_string(g.min_degree()));
  if (is_cycle(g) && b != 2) return fail("cycle with b_R=" + std::to_string(b));
  return pass(b == g.min_degree() ? "tight" : "");
}

Outcome check_cor_uvrtree(Profile& p, const Instance&, const Context&) {
  if (p.order() < 3 || !p.r_uvr()) return skip("not in R_UVR");
  if (p.bondage() != 1) return fail("b_R=" + std::to_string(p.bondage()));
  return pass();
}

Outcome check_obs_sabc(Profile& p, const Instance& inst, const Context&) {
  const LabelledTree& t = *inst.labelled;
  const auto problems = structural_violations(t);
  if (!problems.empty()) return fail(problems.front());
  const DominationSummary& dom = p.domination();
  if (!dom.unique || dom.all_min_sets.front() != t.with_status(Status::B)) return fail("S_B is not the unique gamma-set");
  if (p.gamma_r() != 2 * t.with_status(Status::B).size()) return fail("gamma_r != 2|S_B|");
  return pass();
}

Outcome check_cor_unilab(Profile&, const Instance& inst, const Context&) {
  const auto rec = recognize_script_T(inst.graph, kSweepLimit);
  if (!rec) return fail("tree not recognised");
  if (rec->statuses() != inst.labelled->statuses()) return fail("recognised labelling " + rec->status_string());
  return pass();
}

Outcome check_obs_equi(Profile& p, const Instance&, const Context&) {
  if (p.r_uvr() != p.d_uvr()) return fail(std::string("R_UVR=") + (p.r_uvr() ? "yes" : "no"));
  if (p.r_cvr() != p.d_cvr()) return fail(std::string("R_CVR=") + (p.r_cvr() ? "yes" : "no"));
  return pass(p.d_uvr_literal() != p.r_uvr() ? "plain-equality differential class differs" : "");
}

Outcome check_thm_main(Profile& p, const Instance& inst, const Context& ctx) {
  const Graph& t = p.graph();
  if (t.order() < 3) {
    return skip("order below 3: gamma=" + std::to_string(p.domination().gamma) + " gamma_r=" + std::to_string(p.gamma_r()) +
                " differential=" + std::to_string(p.differential()));
  }
  (void)inst;
  const bool generated = ctx.t_family_codes.count(tree_canonical_code(t)) > 0;
  const bool uvr = p.r_uvr();
  bool crit_iii = p.functions().size() == 1;
  if (crit_iii) {
    const RomanFunction& f = p.functions().front();
    crit_iii = f.v1.empty() && is_independent(t, f.v2);
    for (Vertex v : f.v2) crit_iii = crit_iii && private_neighbors(t, v, f.v2).size() == 3;
  }
  const bool crit_iv = recognize_script_T(t, kSweepLimit).has_value();
  const bool d_uvr = p.d_uvr();
  if (generated == uvr && uvr == crit_iii && crit_iii == crit_iv && crit_iv == d_uvr) {
    std::string note = generated ? "member" : "";
    if (p.d_uvr_literal() != uvr) note += note.empty() ? "plain-equality (v) differs" : ", plain-equality (v) differs";
    return pass(note);
  }
  auto b = [](bool x) { return x ? "1" : "0"; };
  return fail(std::string("i=") + b(generated) + " ii=" + b(uvr) + " iii=" + b(crit_iii) + " iv=" + b(crit_iv) + " v=" + b(d_uvr));
}

Outcome check_cor_sb(Profile& p, const Instance& inst, const Context&) {
  const RomanFunction ft = canonical_gamma_r_function(*inst.labelled);
  if (p.functions() != std::vector<RomanFunction>{ft}) {
    return fail(std::to_string(p.functions().size()) + " gamma_r-functions; f_T=" + describe(ft));
  }
  return pass();
}

Outcome check_cor_vdel(Profile& p, const Instance&, const Context&) {
  const Graph& t = p.graph();
  const RomanFunction& f = p.functions().front();
  for (Vertex x : f.v2) {
    const std::vector<Vertex> pn = private_neighbors(t, x, f.v2).to_vector();
    for (std::size_t i = 0; i < pn.size(); ++i) {
      for (std::size_t j = i + 1; j < pn.size(); ++j) {
        const int after = roman_domination_number(delete_vertices(t, VertexSet{pn[i], pn[j]}).graph, kSweepLimit);
        if (after != p.gamma_r() - 1) {
          return fail("removing " + std::to_string(pn[i]) + "," + std::to_string(pn[j]) + " gives gamma_r=" + std::to_string(after));
        }
      }
    }
  }
  return pass();
}

Outcome check_cor_edel(Profile& p, const Instance&, const Context&) {
  const Graph& t = p.graph();
  const RomanFunction& f = p.functions().front();
  int tested = 0;
  for (const Edge& e : t.edges()) {
    if (!f.v0.contains(e.u) || !f.v0.contains(e.v)) continue;
    ++tested;
    const Graph cut = delete_edges(t, {e});
    const std::string where = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
    if (!in_class_R_UVR(cut, kSweepLimit)) return fail(where + ": forest not in R_UVR");
    for (const Subgraph& c : connected_components(cut))
      if (!in_class_R_UVR(c.graph, kSweepLimit)) return fail(where + ": component not in R_UVR");
  }
  if (tested == 0) return skip("no edge inside V0");
  return pass();
}

Outcome check_prop_t1(Profile& p, const Instance& inst, const Context&) {
  const bool equality = 3 * p.gamma_r() == 2 * p.order();
  if (equality == in_T1(*inst.labelled)) return pass();
  return fail(std::string("equality=") + (equality ? "yes" : "no") + " S_C empty=" + (in_T1(*inst.labelled) ? "yes" : "no"));
}

Outcome check_rec_decomp(Profile&, const Instance& inst, const Context&) {
  const Graph& t = inst.graph;
  if (t.order() < 3) return skip("order below 3");
  const auto rec = recognize_script_T(t, kSweepLimit);
  const auto dec = decompose_script_T(t);
  if (rec.has_value() != dec.has_value()) return fail(std::string("recognised=") + (rec ? "yes" : "no") + " decomposed=" + (dec ? "yes" : "no"));
  if (!dec) return pass();
  if (replay(dec->script) != dec->built) return fail("replay differs from built tree");
  for (const Edge& e : dec->built.tree().edges())
    if (!t.adjacent(dec->to_input[e.u], dec->to_input[e.v])) return fail("vertex map is not an isomorphism");
  for (Vertex v = 0; v < t.order(); ++v)
    if (dec->built.status(v) != rec->status(dec->to_input[v])) return fail("labellings differ at input vertex " + std::to_string(dec->to_input[v]));
  return pass(std::to_string(dec->script.size()) + " steps");
}

Outcome check_ex_uvr(Profile& p, const Instance& inst, const Context&) {
  if (!inst.listed_member) return skip("not a listed member");
  return p.r_uvr() ? pass() : fail("not in R_UVR");
}

// ------------------------------------------------------- whole-family checks

std::vector<std::pair<std::string, Outcome>> global_rem_e1(const Context&) {
  std::vector<std::pair<std::string, Outcome>> out;
  for (int r = 4; r <= 6; ++r) {
    const std::string name = "two K_" + std::to_string(r) + " plus a bridge";
    const Graph g = two_cliques_bridge(r);
    Profile p(g);
    Outcome o = pass();
    if (p.gamma_r() != 4) {
      o = fail("gamma_r=" + std::to_string(p.gamma_r()));
    } else if (!p.r_uvr()) {
      o = fail("not in R_UVR");
    } else {
      const auto& fs = p.functions();
      for (Vertex x1 = 0; x1 < r && o.verdict == Verdict::kPass; ++x1) {
        for (Vertex x2 = r; x2 < 2 * r && o.verdict == Verdict::kPass; ++x2) {
          const VertexSet two{x1, x2};
          const RomanFunction f{g.order(), g.vertices() - two, VertexSet(), two};
          if (std::find(fs.begin(), fs.end(), f) == fs.end()) o = fail("not a gamma_r-function: " + describe(f));
          for (Vertex x : two) {
            const int k = private_neighbors(g, x, two).size();
            if (k != r - 1 && k != r) o = fail("|pn| = " + std::to_string(k) + " for " + describe(f));
          }
        }
      }
    }
    out.emplace_back(name, o);
  }
  return out;
}

std::set<int> expected_tree_orders(int max_n) {
  std::set<int> out;
  for (int n : {3, 6, 7})
    if (n <= max_n) out.insert(n);
  for (int n = 9; n <= max_n; ++n) out.insert(n);
  return out;
}

std::vector<std::pair<std::string, Outcome>> global_minedge_i(const Context& ctx) {
  std::vector<std::pair<std::string, Outcome>> out;
  const int max_n = ctx.limits.trees_max_n;
  const std::set<int> expected = expected_tree_orders(max_n);
  const TFamily fam = generate_t_family(max_n);
  std::set<int> seen;
  for (const auto& t : fam.members) seen.insert(t.order());
  out.emplace_back("generated orders up to " + std::to_string(max_n),
                   seen == expected ? pass() : fail("orders differ from {3,6,7} and 9 onwards"));

  for (int n = 1; n <= max_n; ++n) {
    bool tree_member = false;
    auto trees = free_trees(n);
    while (auto item = trees.next()) tree_member = tree_member || (n >= 3 && in_class_R_UVR(item->graph, kSweepLimit));
    Outcome o = tree_member == (expected.count(n) > 0) ? pass() : fail(std::string("R_UVR tree of this order: ") + (tree_member ? "yes" : "no"));
    if (n <= ctx.limits.graphs_max_n) {
      int min_size = -1;
      for (const Graph& g : connected_graphs(n).collect())
        if (in_class_R_UVR(g, kSweepLimit) && (min_size < 0 || g.size() < min_size)) min_size = g.size();
      const bool tree_sized = min_size == n - 1;
      if (tree_sized != (expected.count(n) > 0)) o = fail("minimum size " + std::to_string(min_size));
    }
    out.emplace_back("order " + std::to_string(n), o);
  }
  return out;
}

std::vector<std::pair<std::string, Outcome>> global_minedge_ii(const Context&) {
  std::vector<std::pair<std::string, Outcome>> out;
  for (int n = 4; n <= 5; ++n) {
    std::vector<Graph> best;
    for (const Graph& g : connected_graphs(n).collect()) {
      if (!in_class_R_UVR(g, kSweepLimit)) continue;
      if (!best.empty() && g.size() < best.front().size()) best.clear();
      if (best.empty() || g.size() == best.front().size()) best.push_back(g);
    }
    Outcome o = pass();
    if (best.size() != 1) {
      o = fail(std::to_string(best.size()) + " minimum-size members");
    } else if (best.front().size() != 2 * n - 3) {
      o = fail("minimum size " + std::to_string(best.front().size()));
    } else if (!are_isomorphic(best.front(), join_graph(complete_graph(2), edgeless_graph(n - 2)))) {
      o = fail("minimum member " + write_graph6(best.front()) + " is not K_2 joined with an independent set");
    }
    out.emplace_back("order " + std::to_string(n), o);
  }
  return out;
}

std::vector<std::pair<std::string, Outcome>> global_minedge_iii(const Context&) {
  std::vector<Graph> members;
  for (const Graph& g : unicyclic_graphs(8).collect())
    if (in_class_R_UVR(g, kSweepLimit)) members.push_back(g);
  Outcome o = pass();
  if (members.size() != 1) {
    o = fail(std::to_string(members.size()) + " unicyclic members");
  } else if (!are_isomorphic(members.front(), figure3_graph())) {
    o = fail("member " + write_graph6(members.front()) + " differs from the 4-cycle with two leaves on opposite vertices");
  }
  Outcome trees = pass();
  for (const Graph& t : free_trees(8).collect())
    if (in_class_R_UVR(t, kSweepLimit)) trees = fail("tree " + write_graph6(t) + " is in R_UVR");
  return {{"unicyclic graphs of order 8", o}, {"trees of order 8", trees}};
}

std::vector<std::pair<std::string, Outcome>> global_unilab(const Context& ctx) {
  const TFamily fam = generate_t_family(ctx.limits.trees_max_n);
  if (!fam.labelling_conflicts.empty()) return {{"generator", fail(fam.labelling_conflicts.front())}};
  return {{"generator", pass(std::to_string(fam.duplicates) + " isomorphic candidates merged")}};
}

// --------------------------------------------------------------- registry

const std::vector<Domain> kGeneral{Domain::kGraphs};
const std::vector<Domain> kWide{Domain::kGraphs, Domain::kTrees, Domain::kUnicyclic, Domain::kFamilies};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    auto add = [&](std::string id, std::string statement, std::string topic, std::vector<Domain> domains,
                   InstanceBody body, GlobalBody global = {}) {
      std::string domain;
      for (Domain x : domains) domain += (domain.empty() ? "" : ",") + std::string(domain_name(x));
      if (global) domain += domain.empty() ? "global" : ",global";
      d.push_back({{std::move(id), std::move(statement), std::move(topic), std::move(domain)}, std::move(domains), std::move(body), std::move(global)});
    };
    add("EQ1", "gamma <= gamma_R <= 2 gamma", "domination sandwich", kGeneral, check_eq1);
    add("LEM-ON", "in every gamma_R-function, components of <V1> have order at most 2 and no edge joins V1 and V2",
        "shape of V1", kGeneral, check_lem_on);
    add("LEM-MINUS", "gamma_R(G-v) < gamma_R(G) iff some gamma_R-function labels v with 1, and then the drop is 1",
        "vertex removal", kGeneral, check_lem_minus);
    add("LEM-MINUSE", "gamma_R(G-e) >= gamma_R(G) for every edge", "edge removal", kGeneral, check_lem_minuse);
    add("THM-R", "G is Roman iff some gamma_R-function has empty V1", "Roman graphs", kGeneral, check_thm_r);
    add("THM-UN", "a dominating set D of a tree is its unique gamma-set iff each member has two non-adjacent private neighbours",
        "unique gamma-sets in trees", {Domain::kTrees}, check_thm_un);
    add("THM-DIFF-I", "gamma_R + differential = |V|", "differential", {Domain::kGraphs, Domain::kTrees}, check_diff_i);
    add("THM-DIFF-II", "an RDF is a gamma_R-function iff V2 is a differential set and V0 = B(V2)", "differential sets",
        {Domain::kGraphs, Domain::kTrees}, check_diff_ii);
    add("OBS-DISC", "G is in R_UVR iff every component is", "components", {Domain::kAllGraphs}, check_obs_disc);
    add("OBS-PN3", "members of R_UVR are Roman, every gamma_R-function has V1 empty, V2 a gamma-set, |pn[v,V2]| >= 3; every gamma-set D gives (V-D; 0; D)",
        "private neighbourhoods", kWide, check_obs_pn3);
    add("REM-E1", "two copies of K_r joined by an edge: gamma_R = 4, in R_UVR, |pn| in {r-1, r}", "large private neighbourhoods",
        {}, {}, global_rem_e1);
    add("PROP-3V2", "connected members of R_UVR have gamma_R <= 2n/3; equality iff V2 is an efficient dominating set of degree-2 vertices",
        "order bound", kWide, check_prop_3v2);
    add("PROP-02", "if v is never labelled 1 then gamma_R(G - E_v) > gamma_R(G)", "isolating a vertex",
        {Domain::kGraphs, Domain::kTrees, Domain::kFamilies}, check_prop_02);
    add("COR-UVRBON", "members of R_UVR have b_R <= min degree; cycles C_3k attain b_R = 2", "bondage bound", kWide, check_cor_uvrbon);
    add("COR-UVRTREE", "trees in R_UVR have b_R = 1", "bondage of trees", {Domain::kTrees}, check_cor_uvrtree);
    add("OBS-SABC", "status sets of generated trees: S_B independent dominating with two A private neighbours each, A vertices see one B, C vertices see two, S_B the unique gamma-set",
        "labelled trees", {Domain::kTFamily}, check_obs_sabc);
    add("COR-UNILAB", "the labelling of a generated tree is determined by the tree", "labelling uniqueness", {Domain::kTFamily},
        check_cor_unilab, global_unilab);
    add("OBS-EQUI", "R_UVR and R_CVR coincide with their differential counterparts", "differential classes", kWide, check_obs_equi);
    add("THM-MAIN", "for trees of order >= 3: generated, in R_UVR, criterion (iii), criterion (iv) and differential-stable agree",
        "tree characterisation", {Domain::kTrees}, check_thm_main);
    add("COR-SB", "f_T = (S_A + S_C; 0; S_B) is the unique gamma_R-function", "canonical function", {Domain::kTFamily}, check_cor_sb);
    add("COR-VDEL", "removing two private neighbours of one V2 vertex lowers gamma_R by 1", "pair removal", {Domain::kTFamily}, check_cor_vdel);
    add("COR-EDEL", "removing an edge inside V0 keeps the forest and its components in R_UVR", "edge removal in trees",
        {Domain::kTFamily}, check_cor_edel);
    add("PROP-T1", "a generated tree has gamma_R = 2n/3 iff it has no C vertex", "extremal trees", {Domain::kTFamily}, check_prop_t1);
    add("MINEDGE-I", "trees in R_UVR exist exactly at orders 3, 6, 7 and from 9 on", "minimum size, trees", {}, {}, global_minedge_i);
    add("MINEDGE-II", "at orders 4 and 5 the minimum-size member of R_UVR is unique: K_2 joined with an independent set, 2n-3 edges",
        "minimum size, orders 4 and 5", {}, {}, global_minedge_ii);
    add("MINEDGE-III", "at order 8 the only unicyclic member of R_UVR is the 4-cycle with two leaves on each of two opposite vertices, and no tree is a member",
        "minimum size, order 8", {}, {}, global_minedge_iii);
    add("REC-DECOMP", "solver-based recognition and gadget peeling agree; replayed scripts are isomorphic to the input", "recognisers",
        {Domain::kTrees}, check_rec_decomp);
    add("EX-UVR", "K_n (n >= 3), K_m,n (m >= n >= 4), P_3k, C_3k, the cube and the icosahedron are in R_UVR", "listed members",
        {Domain::kFamilies}, check_ex_uvr);
    return d;
  }();
  return defs;
}

// -------------------------------------------------------------- instances

std::vector<Instance> families() {
  std::vector<Instance> out;
  auto add = [&](Graph g, std::string label, bool listed) { out.push_back({std::move(g), std::move(label), std::nullopt, listed}); };
  for (int n = 1; n <= 12; ++n) add(path_graph(n), "P_" + std::to_string(n), n % 3 == 0);
  for (int n = 3; n <= 12; ++n) add(cycle_graph(n), "C_" + std::to_string(n), n % 3 == 0);
  for (int n = 1; n <= 8; ++n) add(complete_graph(n), "K_" + std::to_string(n), n >= 3);
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= m; ++n) add(complete_bipartite(m, n), "K_" + std::to_string(m) + "," + std::to_string(n), n >= 4);
  add(cube_graph(), "cube", true);
  add(icosahedron_graph(), "icosahedron", true);
  for (int r = 4; r <= 6; ++r) add(two_cliques_bridge(r), "two K_" + std::to_string(r) + " plus a bridge", false);
  add(figure3_graph(), "C_4 with two leaves on opposite vertices", false);
  for (int n = 3; n <= 8; ++n) add(join_graph(complete_graph(2), edgeless_graph(n - 2)), "K_2 join empty " + std::to_string(n - 2), false);
  return out;
}

std::vector<Instance> instances_of(Domain d, const Limits& limits) {
  std::vector<Instance> out;
  auto push_all = [&](InstanceStream s) {
    while (auto item = s.next()) out.push_back({std::move(item->graph), {}, std::nullopt, false});
  };
  switch (d) {
    case Domain::kGraphs:
      for (int n = 1; n <= limits.graphs_max_n; ++n) push_all(connected_graphs(n));
      break;
    case Domain::kTrees:
      for (int n = 1; n <= limits.trees_max_n; ++n) push_all(free_trees(n));
      break;
    case Domain::kAllGraphs:
      for (int n = 0; n <= limits.graphs_max_n; ++n)
        for (Graph& g : all_graphs(n)) out.push_back({std::move(g), {}, std::nullopt, false});
      break;
    case Domain::kUnicyclic:
      for (int n = kUnicyclicMin; n <= limits.unicyclic_n; ++n) push_all(unicyclic_graphs(n));
      break;
    case Domain::kFamilies:
      out = families();
      break;
    case Domain::kTFamily:
      for (LabelledTree& t : generate_t_family(limits.trees_max_n).members) out.push_back({t.tree(), {}, t, false});
      break;
  }
  return out;
}

// Runs fn(i) for i in [0, count) on `threads` workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << s;
  return os.str();
}

}  // namespace

void validate(const Limits& limits) {
  auto in = [](const char* name, int v, int lo, int hi) {
    if (v < lo || v > hi) {
      throw std::invalid_argument(std::string(name) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) +
                                  ", got " + std::to_string(v));
    }
  };
  in("trees-max-n", limits.trees_max_n, 1, kTreesCap);
  in("graphs-max-n", limits.graphs_max_n, 1, kGraphsCap);
  in("unicyclic-n", limits.unicyclic_n, kUnicyclicMin, kUnicyclicCap);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkip:
      return "skip";
    case Verdict::kInfo:
      return "info";
  }
  return "?";
}

const std::vector<CheckInfo>& checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const CheckDef& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

Report run_suite(const RunOptions& options) {
  validate(options.limits);
  const auto start = Clock::now();
  std::vector<const CheckDef*> selected;
  for (const CheckDef& d : registry())
    if (options.suite == "all" || options.suite == d.info.id) selected.push_back(&d);
  if (selected.empty()) throw std::invalid_argument("unknown suite '" + options.suite + "'");

  Context ctx{options.limits, {}};
  bool need_codes = false;
  std::map<Domain, std::vector<Instance>> domains;
  for (const CheckDef* d : selected) {
    for (Domain dom : d->domains)
      if (!domains.count(dom)) domains.emplace(dom, instances_of(dom, options.limits));
    need_codes = need_codes || d->info.id == "THM-MAIN";
  }
  if (need_codes) {
    for (const LabelledTree& t : generate_t_family(options.limits.trees_max_n).members) ctx.t_family_codes.insert(tree_canonical_code(t.tree()));
  }

  // Slot layout: per check, per listed domain, per instance; then global rows.
  struct Job {
    Domain domain;
    std::size_t instance;
    std::vector<std::pair<const CheckDef*, std::size_t>> targets;
  };
  std::vector<std::vector<CheckResult>> global_rows(selected.size());
  std::vector<std::size_t> offset(selected.size());
  std::size_t slots = 0;
  std::map<std::pair<Domain, std::size_t>, std::size_t> job_index;
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < selected.size(); ++c) {
    offset[c] = slots;
    for (Domain dom : selected[c]->domains) {
      const auto& insts = domains.at(dom);
      for (std::size_t i = 0; i < insts.size(); ++i) {
        auto [it, fresh] = job_index.try_emplace({dom, i}, jobs.size());
        if (fresh) jobs.push_back({dom, i, {}});
        jobs[it->second].targets.emplace_back(selected[c], slots++);
      }
    }
  }
  std::vector<CheckResult> slot_results(slots);
  std::vector<std::size_t> global_jobs;
  for (std::size_t c = 0; c < selected.size(); ++c)
    if (selected[c]->global) global_jobs.push_back(c);

  const int threads = options.threads > 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  parallel_for(jobs.size() + global_jobs.size(), threads, [&](std::size_t k) {
    if (k >= jobs.size()) {
      const std::size_t c = global_jobs[k - jobs.size()];
      const auto t0 = Clock::now();
      std::vector<std::pair<std::string, Outcome>> rows;
      try {
        rows = selected[c]->global(ctx);
      } catch (const std::exception& e) {
        rows = {{"global", fail(std::string("exception: ") + e.what())}};
      }
      const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      for (auto& [label, o] : rows) {
        global_rows[c].push_back({selected[c]->info.id, label, {}, {}, o.verdict, o.witness, o.note, secs / rows.size()});
      }
      return;
    }
    const Job& job = jobs[k];
    const Instance& inst = domains.at(job.domain)[job.instance];
    Profile profile(inst.graph);
    const std::string g6 = write_graph6(inst.graph);
    const std::string statuses = inst.labelled ? inst.labelled->status_string() : "";
    for (const auto& [def, slot] : job.targets) {
      const auto t0 = Clock::now();
      Outcome o;
      try {
        o = def->body(profile, inst, ctx);
      } catch (const std::exception& e) {
        o = fail(std::string("exception: ") + e.what());
      }
      slot_results[slot] = {def->info.id, g6, inst.label, statuses, o.verdict, o.witness, o.note,
                            std::chrono::duration<double>(Clock::now() - t0).count()};
    }
  });

  Report report;
  for (std::size_t c = 0; c < selected.size(); ++c) {
    const std::size_t end = c + 1 < selected.size() ? offset[c + 1] : slots;
    for (std::size_t s = offset[c]; s < end; ++s) report.results.push_back(std::move(slot_results[s]));
    for (CheckResult& r : global_rows[c]) report.results.push_back(std::move(r));
  }
  for (const CheckResult& r : report.results) {
    switch (r.verdict) {
      case Verdict::kPass:
        ++report.passed;
        break;
      case Verdict::kFail:
        ++report.failed;
        break;
      case Verdict::kSkip:
        ++report.skipped;
        break;
      case Verdict::kInfo:
        ++report.informational;
        break;
    }
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

namespace {

struct Tally {
  std::size_t pass = 0, fail = 0, skip = 0, info = 0;
};

std::vector<std::pair<std::string, Tally>> per_check(const Report& report) {
  std::vector<std::pair<std::string, Tally>> out;
  for (const CheckResult& r : report.results) {
    if (out.empty() || out.back().first != r.check) out.emplace_back(r.check, Tally{});
    Tally& t = out.back().second;
    (r.verdict == Verdict::kPass ? t.pass : r.verdict == Verdict::kFail ? t.fail : r.verdict == Verdict::kSkip ? t.skip : t.info)++;
  }
  return out;
}

}  // namespace

void write_json_lines(const Report& report, const RunOptions& options, std::ostream& out, bool timing) {
  using nlohmann::ordered_json;
  for (const CheckResult& r : report.results) {
    ordered_json j;
    j["check"] = r.check;
    j["instance"] = r.instance;
    if (!r.label.empty()) j["label"] = r.label;
    if (!r.statuses.empty()) j["statuses"] = r.statuses;
    j["verdict"] = std::string(to_string(r.verdict));
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    if (timing) j["seconds"] = std::stod(format_seconds(r.seconds));
    out << j.dump() << '\n';
  }
  ordered_json summary;
  summary["suite"] = options.suite;
  summary["limits"] = {{"trees_max_n", options.limits.trees_max_n},
                       {"graphs_max_n", options.limits.graphs_max_n},
                       {"unicyclic_n", options.limits.unicyclic_n}};
  summary["results"] = report.results.size();
  summary["pass"] = report.passed;
  summary["fail"] = report.failed;
  summary["skip"] = report.skipped;
  summary["info"] = report.informational;
  ordered_json by_check = ordered_json::object();
  for (const auto& [id, t] : per_check(report)) by_check[id] = {{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}, {"info", t.info}};
  summary["checks"] = by_check;
  summary["ok"] = report.ok();
  if (timing) summary["seconds"] = std::stod(format_seconds(report.seconds));
  out << ordered_json{{"summary", summary}}.dump() << '\n';
}

void write_table(const Report& report, const RunOptions& options, std::ostream& out) {
  std::map<std::string, const CheckInfo*> info;
  for (const CheckInfo& c : checks()) info[c.id] = &c;
  out << std::left << std::setw(13) << "check" << std::right << std::setw(7) << "pass" << std::setw(6) << "fail" << std::setw(6)
      << "skip" << std::setw(6) << "info" << "  statement\n";
  for (const auto& [id, t] : per_check(report)) {
    out << std::left << std::setw(13) << id << std::right << std::setw(7) << t.pass << std::setw(6) << t.fail << std::setw(6) << t.skip
        << std::setw(6) << t.info << "  " << info.at(id)->statement << '\n';
  }
  for (const CheckResult& r : report.results) {
    if (r.verdict != Verdict::kFail) continue;
    out << "FAIL " << r.check << ' ' << r.instance;
    if (!r.label.empty()) out << " (" << r.label << ')';
    out << ": " << r.witness << '\n';
  }
  out << "suite " << options.suite << ": " << report.passed << " passed, " << report.failed << " failed, " << report.skipped
      << " skipped, " << report.informational << " informational\n";
}

}  // namespace rdom::verify
