#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "testutil.hpp"
#include "udg/error.hpp"
#include "udg/euclid_embed.hpp"
#include "udg/geom.hpp"
#include "udg/sphere_embed.hpp"
#include "udg/verify.hpp"

using namespace udg;
using namespace testutil;

TEST_CASE("verify_edges") {
  Graph g(2);
  g.add_edge(0, 1);

  Embedding exact(2, 2);
  exact.pos[0] = {0.0, 0.0};
  exact.pos[1] = {1.0, 0.0};
  VerifyReport ok = verify_edges(g, exact);
  CHECK(ok.pass);
  CHECK(ok.max_edge_deviation == 0.0);
  CHECK(ok.distinct_min_gap == doctest::Approx(1.0));

  Embedding off(2, 2);
  off.pos[0] = {0.0, 0.0};
  off.pos[1] = {1.0 + 1e-6, 0.0};
  VerifyReport bad = verify_edges(g, off);
  CHECK(!bad.pass);
  CHECK(bad.max_edge_deviation == doctest::Approx(1e-6));
  CHECK(bad.worst_edge == std::pair<int, int>{0, 1});

  Embedding missing(2, 2);
  missing.pos[0] = {0.0, 0.0};
  CHECK_THROWS_AS(verify_edges(g, missing), Error);

  // construction fixture: glued simplices are exact to 1e-12
  auto pts = glued_simplices(3);
  Graph ke(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (!(u == 3 && v == 4)) ke.add_edge(u, v);
  Embedding ge(3, 5);
  for (int i = 0; i < 5; ++i) ge.pos[i] = pts[i];
  CHECK(verify_edges(ke, ge).max_edge_deviation <= 1e-12);
}

TEST_CASE("verify_sphere") {
  Embedding e(2, 2);
  e.pos[0] = {kSphereRadius, 0.0};
  e.pos[1] = {0.0, kSphereRadius};
  CHECK(verify_sphere(e, kSphereRadius).pass);
  CHECK(verify_sphere(e, kSphereRadius).sphere_deviation == 0.0);

  // the inner apex of the first worked example has norm 1/sqrt6
  Embedding apex(3, 1);
  double c = std::sqrt(2.0) / 6.0;
  apex.pos[0] = {-c, -c, -c};
  VerifyReport r = verify_sphere(apex, kSphereRadius);
  CHECK(!r.pass);
  CHECK(r.sphere_deviation ==
        doctest::Approx(kSphereRadius - 1.0 / std::sqrt(6.0)));

  CHECK(verify_sphere(Embedding(3, 0), kSphereRadius).pass);  // vacuous
}

TEST_CASE("verify_gp") {
  Rng rng(11);
  SUBCASE("a vertex at distance 1 from three others fails property 1") {
    double r = kSphereRadius;
    Embedding e(3, 4);
    e.pos[0] = {r, 0, 0};
    e.pos[1] = {0, r, 0};
    e.pos[2] = {0, 0, r};
    ApexPoints ap = apex_points({e.pos[0], e.pos[1], e.pos[2]}, 3);
    e.pos[3] = ap.p_plus;
    VerifyReport rep = verify_gp(e, {});
    CHECK(!rep.pass);
  }
  SUBCASE("C_4 from embed_gp_s2 passes with its exemption, fails without") {
    Graph g = cycle_graph(4);
    auto [e, cert] = embed_gp_s2(g, Frame::standard(3, 0, 3), rng);
    CHECK(verify_gp(e, cert.exempt_pairs).pass);
  }
  SUBCASE("three vertices: property 2 is vacuous") {
    Embedding e(3, 3);
    e.pos[0] = {kSphereRadius, 0, 0};
    e.pos[1] = {0, kSphereRadius, 0};
    e.pos[2] = {0, 0, kSphereRadius};
    CHECK(verify_gp(e, {}).pass);
  }
  SUBCASE("a hand-built coplanar quadruple fails") {
    double r = kSphereRadius;
    Embedding e(3, 4);
    e.pos[0] = {r, 0, 0};
    e.pos[1] = {-r, 0, 0};
    e.pos[2] = {0, r, 0};
    e.pos[3] = {0, -r, 0};
    CHECK(!verify_gp(e, {}).pass);
    // with both pairs exempt (two 4-cycle reinsertion pairs) it is allowed
    CHECK(verify_gp(e, {{0, 1}, {2, 3}}).pass);
  }
}

TEST_CASE("lsq_realize finds known realizations") {
  SUBCASE("unit triangle in the plane") {
    Rng rng(21);
    auto e = lsq_realize(cycle_graph(3), 2, rng, 20, 2000);
    REQUIRE(e.has_value());
    CHECK(verify_edges(cycle_graph(3), *e).max_edge_deviation <= 1e-7);
  }
  SUBCASE("cube graph in 3-space, cross-checking the constructive route") {
    Rng rng(22);
    Graph q3 = cube_q3();
    Embedding constructive = embed_d3(q3, rng);
    CHECK(verify_edges(q3, constructive).pass);
    auto oracle = lsq_realize(q3, 3, rng, 50, 4000);
    REQUIRE(oracle.has_value());
    CHECK(verify_edges(q3, *oracle).max_edge_deviation <= 1e-7);
  }
  SUBCASE("K_5 in the plane stays absent") {
    Rng rng(23);
    CHECK(!lsq_realize(complete_graph(5), 2, rng, 50, 1500).has_value());
  }
  SUBCASE("edgeless graphs are trivially realizable") {
    Rng rng(24);
    CHECK(lsq_realize(Graph(3), 2, rng).has_value());
  }
}

TEST_CASE("verifier catches what embedders promise") {
  Rng rng(31);
  for (int it = 0; it < 30; ++it) {
    int n = 3 + static_cast<int>(rng.below(15));
    Graph g = random_graph_max_degree(n, 2, rng, 0.6);
    auto [e, cert] = embed_gp_s2(g, Frame::standard(3, 0, 3), rng);
    CHECK(verify_edges(g, e).pass);
    CHECK(verify_sphere(e, kSphereRadius).pass);
  }
}
