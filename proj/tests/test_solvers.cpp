#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "rdom/constructions.hpp"
#include "rdom/errors.hpp"
#include "rdom/graph6.hpp"
#include "rdom/solvers.hpp"

using namespace rdom;

namespace {

oracle::Labelling as_labelling(const RomanFunction& f) {
  oracle::Labelling out(static_cast<std::size_t>(f.order));
  for (Vertex v = 0; v < f.order; ++v) out[v] = f.value(v);
  return out;
}

std::vector<VertexSet> as_sets(const std::vector<std::uint64_t>& masks) {
  std::vector<VertexSet> out;
  for (auto m : masks) out.emplace_back(m);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

TEST_CASE("is_dominating") {
  CHECK(is_dominating(path_graph(3), VertexSet{1}));
  CHECK_FALSE(is_dominating(path_graph(3), VertexSet{0}));
  CHECK(is_dominating(cycle_graph(6), VertexSet{0, 3}));
}

TEST_CASE("minimum dominating sets") {
  const DominationSummary p6 = minimum_dominating_sets(path_graph(6));
  CHECK(p6.gamma == 2);
  CHECK(p6.unique);
  CHECK(p6.all_min_sets == std::vector<VertexSet>{VertexSet{1, 4}});

  const Graph p4 = path_graph(4);
  const DominationSummary s = minimum_dominating_sets(p4);
  CHECK(s.gamma == 2);
  CHECK_FALSE(s.unique);
  CHECK(s.all_min_sets == as_sets(oracle::min_dominating_sets(p4)));

  const DominationSummary e = minimum_dominating_sets(edgeless_graph(5));
  CHECK(e.gamma == 5);
  CHECK(e.unique);
  CHECK(domination_number(Graph(0)) == 0);
  CHECK_THROWS_AS(domination_number(path_graph(21)), LimitExceeded);
}

TEST_CASE("tree_unique_gamma_structural") {
  CHECK(tree_unique_gamma_structural(path_graph(6), VertexSet{1, 4}));
  CHECK(tree_unique_gamma_structural(path_graph(3), VertexSet{1}));
  // pn[1, {1,2}] = {0}, pn[2, {1,2}] = {3}: one private neighbour each.
  CHECK_FALSE(tree_unique_gamma_structural(path_graph(4), VertexSet{1, 2}));
  CHECK_THROWS_AS(tree_unique_gamma_structural(cycle_graph(4), VertexSet{0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(tree_unique_gamma_structural(path_graph(4), VertexSet{0}), std::invalid_argument);
  CHECK_THROWS_AS(tree_unique_gamma_structural(path_graph(2), VertexSet{0}), std::invalid_argument);
}

TEST_CASE("roman domination number examples") {
  CHECK(roman_domination_number(path_graph(3)) == 2);
  CHECK(roman_domination_number(cycle_graph(6)) == 4);
  CHECK(roman_domination_number(figure3_graph()) == 4);
  CHECK(oracle::gamma_r(path_graph(3)) == 2);
  CHECK(oracle::gamma_r(cycle_graph(6)) == 4);
  CHECK(oracle::gamma_r(figure3_graph()) == 4);
  CHECK(roman_domination_number(Graph(0)) == 0);
  CHECK(roman_domination_number(edgeless_graph(4)) == 4);
  CHECK_THROWS_AS(roman_domination_number(path_graph(21)), LimitExceeded);
  CHECK_NOTHROW(roman_domination_number(path_graph(20)));
}

TEST_CASE("gamma_r_functions examples") {
  const auto p3 = gamma_r_functions(path_graph(3));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0] == RomanFunction{3, VertexSet{0, 2}, VertexSet(), VertexSet{1}});

  const auto p4 = gamma_r_functions(path_graph(4));
  const RomanFunction expected{4, VertexSet{0, 2}, VertexSet{3}, VertexSet{1}};
  CHECK(std::find(p4.begin(), p4.end(), expected) != p4.end());
  for (const auto& f : p4) CHECK(f.weight() == 3);

  const auto e2 = gamma_r_functions(edgeless_graph(2));
  REQUIRE(e2.size() == 1);
  CHECK(e2[0] == RomanFunction{2, VertexSet(), VertexSet{0, 1}, VertexSet()});
}

TEST_CASE("a singleton V1 component occurs already on P_4") {
  const RomanFunction f{4, VertexSet{0, 2}, VertexSet{3}, VertexSet{1}};
  const auto all = gamma_r_functions(path_graph(4));
  CHECK(std::find(all.begin(), all.end(), f) != all.end());
  CHECK(f.v1.size() == 1);
}

TEST_CASE("validate_rdf") {
  const Graph p3 = path_graph(3);
  CHECK(validate_rdf(p3, {3, VertexSet{0, 2}, VertexSet(), VertexSet{1}}).valid);
  const RdfCheck bad = validate_rdf(p3, {3, VertexSet{1, 2}, VertexSet(), VertexSet{0}});
  CHECK_FALSE(bad.valid);
  CHECK(bad.witness == 2);
  CHECK(validate_rdf(cube_graph(), {8, VertexSet(), VertexSet::first(8), VertexSet()}).valid);
  CHECK_THROWS_AS(validate_rdf(p3, {3, VertexSet{0}, VertexSet(), VertexSet{1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_rdf(p3, {3, VertexSet{0, 1}, VertexSet(), VertexSet{1, 2}}), std::invalid_argument);
}

TEST_CASE("differential examples") {
  CHECK(differential_value(path_graph(3)) == 1);
  const auto sets = differential_sets(path_graph(3));
  CHECK(std::find(sets.begin(), sets.end(), VertexSet{1}) != sets.end());
  CHECK(differential_value(edgeless_graph(4)) == 0);
  CHECK(differential_sets(edgeless_graph(4)) == std::vector<VertexSet>{VertexSet()});
  CHECK(differential_value(cycle_graph(6)) == 2);
  CHECK(oracle::differential(cycle_graph(6)) == 2);
}

TEST_CASE("efficient dominating sets") {
  CHECK(efficient_dominating_sets(path_graph(3)) == std::vector<VertexSet>{VertexSet{1}});
  const auto c6 = efficient_dominating_sets(cycle_graph(6));
  CHECK(std::find(c6.begin(), c6.end(), VertexSet{0, 3}) != c6.end());
  CHECK(c6.size() == 3);
  CHECK(efficient_dominating_sets(cycle_graph(4)).empty());
}

TEST_CASE("fault hook shifts only the target order") {
  fault::arm_gamma_r_off_by_one(3);
  CHECK(roman_domination_number(path_graph(3)) == 3);
  CHECK(roman_domination_number(path_graph(4)) == 3);
  fault::disarm();
  CHECK(roman_domination_number(path_graph(3)) == 2);
}

TEST_CASE("property: solvers agree with brute force on random graphs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const double p = std::uniform_real_distribution<double>(0.05, 0.8)(rng);
    const Graph g = oracle::random_graph(rng, n, p);
    const std::string g6 = write_graph6(g);
    CAPTURE(g6);
    const int gr = roman_domination_number(g);
    CHECK(gr == oracle::gamma_r(g));

    std::vector<oracle::Labelling> ours;
    for (const auto& f : gamma_r_functions(g)) {
      CHECK(validate_rdf(g, f).valid);
      CHECK(f.weight() == gr);
      ours.push_back(as_labelling(f));
    }
    auto expected = oracle::gamma_r_labellings(g);
    std::sort(ours.begin(), ours.end());
    std::sort(expected.begin(), expected.end());
    CHECK(ours == expected);

    const DominationSummary d = minimum_dominating_sets(g);
    CHECK(d.all_min_sets == as_sets(oracle::min_dominating_sets(g)));
    CHECK(d.unique == (d.all_min_sets.size() == 1));
    CHECK(differential_value(g) == oracle::differential(g));
    CHECK(gr + differential_value(g) == n);
    CHECK(d.gamma <= gr);
    CHECK(gr <= 2 * d.gamma);

    for (VertexSet s : efficient_dominating_sets(g)) {
      CHECK(s.size() == d.gamma);
      int covered = 0;
      for (Vertex v : s) covered += g.closed_neighbors(v).size();
      CHECK(covered == n);
      CHECK(is_dominating(g, s));
    }
  }
}

TEST_CASE("property: every γ_R-function has V1 = V - N[V2] and V1 components of order <= 2") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    for (const auto& f : gamma_r_functions(g)) {
      CHECK(f.v1 == g.vertices() - g.closed_neighborhood(f.v2));
      CHECK(f.v0 == boundary(g, f.v2));
      for (const Subgraph& c : connected_components(induced_subgraph(g, f.v1).graph)) CHECK(c.graph.order() <= 2);
    }
  }
}

TEST_CASE("property: enumerations are sorted") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.3);
    const auto fs = gamma_r_functions(g);
    CHECK(std::is_sorted(fs.begin(), fs.end()));
    const auto ds = minimum_dominating_sets(g).all_min_sets;
    CHECK(std::is_sorted(ds.begin(), ds.end(), lex_less));
    const auto ps = differential_sets(g);
    CHECK(std::is_sorted(ps.begin(), ps.end(), lex_less));
  }
}
