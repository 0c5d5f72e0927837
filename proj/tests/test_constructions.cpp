#include <doctest.h>

#include "opturan/canonical.hpp"
#include "opturan/constructions.hpp"
#include "opturan/doublestar.hpp"
#include "opturan/graph.hpp"
#include "opturan/mops.hpp"
#include "opturan/planarity.hpp"

using namespace opturan;

TEST_CASE("closed forms") {
  CHECK(h_formula(6) == 7);
  CHECK(h_formula(10) == 13);
  CHECK(h_formula(13) == 18);
  CHECK_THROWS_AS(h_formula(0), std::invalid_argument);

  CHECK(f_formula(12) == 19);
  CHECK(f_formula(7) == 10);
  CHECK(f_formula(9) == 13);
  CHECK(f_formula(6) == 9);
  CHECK(f_formula(11) == 17);
  CHECK_THROWS_AS(f_formula(5), std::invalid_argument);
}

TEST_CASE("fans") {
  Graph m5 = fan_mop(5);
  CHECK(m5.edge_count() == 7);
  CHECK(is_maximal_outerplanar(m5));
  CHECK(fan_mop(2).edge_count() == 1);
  CHECK(fan_mop(4).edge_count() == 5);
  CHECK(fan_mop(1).vertex_count() == 1);
  CHECK_THROWS_AS(fan_mop(0), std::invalid_argument);
}

TEST_CASE("apex-over-matching family") {
  CHECK(construct_gn(12).edge_count() == 16);
  CHECK(construct_gn(13).edge_count() == 18);
  CHECK(construct_gn(7).edge_count() == 9);
  CHECK_THROWS_AS(construct_gn(5), std::invalid_argument);

  for (int n = 6; n <= 30; ++n) {
    Graph g = construct_gn(n);
    CHECK(g.vertex_count() == n);
    CHECK(g.edge_count() == h_formula(n));
    CHECK(is_connected(g));
    CHECK(is_outerplanar(g));
    CHECK(is_double_star_free(g, {2, 2}));
    int high_degree = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) >= 3) ++high_degree;
    CHECK(high_degree == 1);
  }
}

TEST_CASE("two disjoint order-5 fans") {
  Graph g = construct_two_m5();
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 14);
  CHECK(component_count(g) == 2);
  CHECK(is_outerplanar(g));
  CHECK(is_double_star_free(g, {2, 2}));
}

TEST_CASE("apex-over-path and serpentine families") {
  CHECK(construct_tn(8).edge_count() == 13);
  CHECK(is_double_star_free(construct_tn(8), {3, 3}));
  CHECK(canonical_form(construct_tn(3)) ==
        canonical_form(fan_mop(3)));  // triangle
  CHECK_THROWS_AS(construct_tn(2), std::invalid_argument);

  CHECK(construct_on(14).edge_count() == 25);
  CHECK(construct_on(14).max_degree() == 4);
  CHECK_THROWS_AS(construct_on(4), std::invalid_argument);
  CHECK(canonical_form(construct_on(5)) == canonical_form(fan_mop(5)));

  // Degree 4 keeps every double star with q >= 4 out.
  for (int q = 4; q <= 6; ++q)
    for (int p = 1; p <= 3; ++p)
      CHECK(is_double_star_free(construct_on(12), DoubleStarSpec(p, q)));
  CHECK_FALSE(is_double_star_free(construct_on(12), {2, 3}));

  for (int n = 5; n <= 30; ++n) {
    Graph on = construct_on(n);
    Graph tn = construct_tn(n);
    CHECK(is_maximal_outerplanar(on));
    CHECK(is_maximal_outerplanar(tn));
    CHECK(on.edge_count() == 2 * n - 3);
    CHECK(tn.edge_count() == 2 * n - 3);
    CHECK(on.max_degree() == 4);
    int high_degree = 0;
    for (int v = 0; v < n; ++v)
      if (tn.degree(v) >= 4) ++high_degree;
    CHECK(high_degree == 1);
  }
}

TEST_CASE("the chain block: 9 edges, degree profile, ports") {
  Graph h = construct_h();
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 9);
  CHECK(h.max_degree() == 4);
  CHECK(is_double_star_free(h, {2, 3}));
  int degree_two = 0;
  for (int v = 0; v < 6; ++v)
    if (h.degree(v) == 2) ++degree_two;
  CHECK(degree_two == 2);
  CHECK(canonical_form(h) == canonical_form(construct_on(6)));
}

TEST_CASE("degree-4 triangulations of the hexagon") {
  // Two classes reach maximum degree 4; only one of them has exactly
  // two vertices of degree 2, and that one is the chain block.
  auto mops = enumerate_mops(6);
  CHECK(mops.size() == 3);
  int degree4_classes = 0;
  int matching_h = 0;
  for (const auto& g : mops) {
    if (g.max_degree() != 4) continue;
    ++degree4_classes;
    int degree_two = 0;
    for (int v = 0; v < 6; ++v)
      if (g.degree(v) == 2) ++degree_two;
    if (degree_two == 2) {
      ++matching_h;
      CHECK(canonical_form(g) == canonical_form(construct_h()));
    }
  }
  CHECK(degree4_classes == 2);
  CHECK(matching_h == 1);
}

TEST_CASE("chained-block family: orders, edge counts, freeness") {
  CHECK(construct_hprime(3, 0).vertex_count() == 18);
  CHECK(construct_hprime(3, 0).edge_count() == 29);
  CHECK(construct_hprime(2, 1).vertex_count() == 13);
  CHECK(construct_hprime(2, 1).edge_count() == 20);
  CHECK(construct_hprime(2, 5).vertex_count() == 17);
  CHECK(construct_hprime(2, 5).edge_count() == 27);
  CHECK(is_double_star_free(construct_hprime(2, 5), {2, 3}));
  CHECK_THROWS_AS(construct_hprime(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_hprime(2, 6), std::invalid_argument);

  for (int t = 1; t <= 4; ++t) {
    // The bare chain has exactly two degree-2 vertices (its open ports).
    Graph chain = construct_hprime(t, 0);
    int degree_two = 0;
    for (int v = 0; v < chain.vertex_count(); ++v)
      if (chain.degree(v) == 2) ++degree_two;
    CHECK(degree_two == 2);

    for (int i = 0; i <= 5; ++i) {
      Graph g = construct_hprime(t, i);
      CHECK(g.vertex_count() == 6 * t + i);
      CHECK(g.edge_count() == f_formula(6 * t + i));
      CHECK(is_connected(g));
      CHECK(is_outerplanar(g));
      CHECK(is_double_star_free(g, {2, 3}));
    }
  }
}

TEST_CASE("closed-form dispatcher") {
  auto exact = [](const TuranBound& b) {
    REQUIRE(b.kind == TuranBound::Kind::kExact);
    return b.value;
  };
  CHECK(exact(turan_formula(10, {2, 2}, Mode::kGeneral)) == 14);
  CHECK(exact(turan_formula(10, {2, 2}, Mode::kConnected)) == 13);
  CHECK(exact(turan_formula(8, {2, 4}, Mode::kGeneral)) == 13);
  CHECK(exact(turan_formula(6, {2, 3}, Mode::kGeneral)) == 9);
  CHECK(exact(turan_formula(5, {2, 2}, Mode::kConnected)) == 7);
  CHECK(exact(turan_formula(1, {1, 1}, Mode::kGeneral)) == 0);

  TuranBound s23 = turan_formula(7, {2, 3}, Mode::kGeneral);
  CHECK(s23.kind == TuranBound::Kind::kLowerBound);
  CHECK(s23.value == 10);

  CHECK(turan_formula(8, {2, 2}, Mode::kGeneral).kind ==
        TuranBound::Kind::kExact);
  CHECK(turan_formula(12, {1, 2}, Mode::kGeneral).kind ==
        TuranBound::Kind::kUnknown);
  CHECK(turan_formula(9, {1, 4}, Mode::kGeneral).kind ==
        TuranBound::Kind::kUnknown);
}
