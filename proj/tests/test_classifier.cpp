#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rdom/classifier.hpp"
#include "rdom/constructions.hpp"
#include "rdom/errors.hpp"

using namespace rdom;

TEST_CASE("removal_effect") {
  CHECK(removal_effect(path_graph(4), 3) == RemovalEffect::kDecreased);
  for (Vertex v = 0; v < 6; ++v) CHECK(removal_effect(path_graph(6), v) == RemovalEffect::kUnchanged);
  CHECK(removal_effect(star(4), 0) == RemovalEffect::kIncreased);
  CHECK(to_string(RemovalEffect::kIncreased) == "increased");
}

TEST_CASE("vertex-removal classes") {
  CHECK(in_class_R_UVR(complete_bipartite(4, 4)));
  CHECK(in_class_R_UVR(cube_graph()));
  CHECK(in_class_R_UVR(icosahedron_graph()));
  CHECK_FALSE(in_class_R_UVR(path_graph(4)));
  CHECK(in_class_R_UVR(path_graph(6)));
  CHECK(in_class_R_UVR(cycle_graph(9)));
  CHECK_FALSE(in_class_R_UVR(cycle_graph(5)));
  CHECK(in_class_dUVR(complete_bipartite(4, 4)) == in_class_R_UVR(complete_bipartite(4, 4)));
}

TEST_CASE("plain-equality differential classes split from the γ_R classes") {
  // γ_R(P_5) = γ_R(P_6) = 4 but ∂(P_5) = 1 and ∂(P_6) = 2.
  CHECK(in_class_R_UVR(path_graph(6)));
  CHECK(in_class_dUVR(path_graph(6)));
  CHECK_FALSE(in_class_dUVR_literal(path_graph(6)));
  CHECK(differential_value(path_graph(5)) == 1);
  CHECK(differential_value(path_graph(6)) == 2);
}

TEST_CASE("is_roman") {
  CHECK(is_roman(path_graph(6)));
  CHECK_FALSE(is_roman(path_graph(4)));
  CHECK_FALSE(is_roman(Graph(1)));
}

TEST_CASE("is_URD") {
  CHECK(is_URD(path_graph(3)));
  CHECK(is_URD(path_graph(6)));
  CHECK_FALSE(is_URD(complete_graph(3)));
}

TEST_CASE("vertex_never_one") {
  CHECK(vertex_never_one(path_graph(3), 1));
  CHECK_FALSE(vertex_never_one(path_graph(4), 3));
  for (Vertex v = 0; v < 6; ++v) CHECK(vertex_never_one(cycle_graph(6), v));
}

TEST_CASE("roman bondage number") {
  CHECK(roman_bondage_number(path_graph(6)) == 1);
  CHECK(roman_bondage_number(complete_graph(3)) == 2);
  CHECK(roman_bondage_number(cycle_graph(6)) == 2);
  CHECK(roman_bondage_number(path_graph(4)) == oracle::bondage(path_graph(4), 3));
  CHECK_THROWS_AS(roman_bondage_number(path_graph(2)), std::invalid_argument);
  CHECK_THROWS_AS(roman_bondage_number(path_graph(6), 0), BoundViolation);
}

TEST_CASE("two cliques joined by a bridge") {
  for (int r = 4; r <= 6; ++r) {
    const Graph g = two_cliques_bridge(r);
    CHECK(roman_domination_number(g) == 4);
    CHECK(in_class_R_UVR(g));
  }
}

TEST_CASE("classify") {
  const ClassReport p6 = classify(path_graph(6));
  CHECK(p6.in_R_UVR);
  CHECK(p6.bondage == 1);
  CHECK(p6.gamma == 2);
  CHECK(p6.gamma_r == 4);
  CHECK(p6.differential == 2);
  CHECK(p6.is_URD);
  CHECK_FALSE(classify(path_graph(4)).in_R_UVR);
  CHECK(classify(complete_bipartite(4, 4)).in_R_UVR);
  CHECK_FALSE(classify(path_graph(2)).bondage.has_value());
}

TEST_CASE("property: report invariants on random graphs") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    const ClassReport r = classify(g);
    bool all_same = true;
    bool none_same = true;
    for (RemovalEffect e : r.per_vertex_effect) {
      all_same = all_same && e == RemovalEffect::kUnchanged;
      none_same = none_same && e != RemovalEffect::kUnchanged;
    }
    CHECK(r.in_R_UVR == all_same);
    CHECK(r.in_R_CVR == none_same);
    CHECK(r.in_R_UVR == r.in_dUVR);
    CHECK(r.in_R_CVR == r.in_dCVR);
    if (r.bondage && n <= 6) CHECK(*r.bondage == oracle::bondage(g, g.size()));
  }
}

TEST_CASE("property: bondage never exceeds its upper bound") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.5);
    if (g.max_degree() < 2) continue;
    CHECK(roman_bondage_number(g) <= bondage_upper_bound(g));
  }
}
