#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "testutil.hpp"
#include "udg/error.hpp"
#include "udg/sphere_embed.hpp"
#include "udg/verify.hpp"

using namespace udg;
using namespace testutil;

namespace {

void expect_verified_on_sphere(const Graph& g, const Embedding& e) {
  Tolerances tol;
  VerifyReport er = verify_edges(g, e, tol);
  CHECK(er.pass);
  CHECK(er.max_edge_deviation <= 1e-9);
  VerifyReport sr = verify_sphere(e, kSphereRadius, tol);
  CHECK(sr.pass);
  CHECK(sr.sphere_deviation <= 1e-9);
}

}  // namespace

TEST_CASE("embed_matchings_on_circles") {
  Rng rng(1);
  SUBCASE("one edge on one circle") {
    Graph g(2);
    g.add_edge(0, 1);
    Embedding e = embed_matchings_on_circles(g, {{0, 1}}, 2, rng);
    CHECK(std::fabs(dist(e.pos[0], e.pos[1]) - 1.0) <= 1e-12);
    expect_verified_on_sphere(g, e);
  }
  SUBCASE("two singletons stay apart and non-antipodal") {
    Graph g(2);
    Embedding e = embed_matchings_on_circles(g, {{0, 1}}, 2, rng);
    double d01 = dist(e.pos[0], e.pos[1]);
    CHECK(d01 > 1e-6);
    CHECK(d01 < 2.0 * kSphereRadius - 1e-6);
  }
  SUBCASE("two circles: cross distances are exactly 1") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    Embedding e = embed_matchings_on_circles(g, {{0, 1}, {2, 3}}, 4, rng);
    expect_verified_on_sphere(g, e);
    for (int u : {0, 1})
      for (int v : {2, 3})
        CHECK(std::fabs(dist(e.pos[u], e.pos[v]) - 1.0) <= 1e-12);
  }
  SUBCASE("rejects a non-matching part") {
    Graph g = path_graph(3);
    std::vector<std::vector<int>> parts = {{0, 1, 2}};
    CHECK_THROWS_AS(embed_matchings_on_circles(g, parts, 2, rng), Error);
  }
}

TEST_CASE("embed_gp_s2 small cases") {
  Rng rng(2);
  Frame f3 = Frame::standard(3, 0, 3);

  SUBCASE("single edge: orthogonal points") {
    Graph g(2);
    g.add_edge(0, 1);
    auto [e, cert] = embed_gp_s2(g, f3, rng);
    CHECK(std::fabs(dot(e.pos[0], e.pos[1])) <= 1e-12);
    expect_verified_on_sphere(g, e);
  }
  SUBCASE("triangle: three pairwise-orthogonal points") {
    Graph g = cycle_graph(3);
    auto [e, cert] = embed_gp_s2(g, f3, rng);
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v)
        CHECK(std::fabs(dist(e.pos[u], e.pos[v]) - 1.0) <= 1e-12);
  }
  SUBCASE("4-cycle: the exempt antipodal pair appears") {
    Graph g = cycle_graph(4);
    auto [e, cert] = embed_gp_s2(g, f3, rng);
    REQUIRE(cert.exempt_pairs.size() == 1);
    auto [a, b] = cert.exempt_pairs[0];
    CHECK(norm(add(e.pos[a], e.pos[b])) <= 1e-12);
    expect_verified_on_sphere(g, e);
    CHECK(verify_gp(e, cert.exempt_pairs).pass);
  }
}

TEST_CASE("embed_gp_s2 certificates on random max-degree-2 graphs") {
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng.below(20));
    Graph g = random_graph_max_degree(n, 2, rng, 0.7);
    auto [e, cert] = embed_gp_s2(g, Frame::standard(3, 0, 3), rng);
    expect_verified_on_sphere(g, e);
    CHECK(verify_gp(e, cert.exempt_pairs).pass);
    if (g.n() >= 4) {
      CHECK(cert.p1_margin >= 1e-6);
      CHECK(cert.p2_margin >= 1e-6);
      CHECK(cert.p3_margin >= 1e-6);
      CHECK(cert.p4_margin >= 1e-6);
    }
  }
}

TEST_CASE("embed_max_degree_sphere") {
  Rng rng(4);
  SUBCASE("K_2 on the circle") {
    Graph g(2);
    g.add_edge(0, 1);
    Embedding e = embed_max_degree_sphere(g, 2, rng);
    CHECK(e.dim == 2);
    expect_verified_on_sphere(g, e);
  }
  SUBCASE("C_5 on the 2-sphere") {
    Graph g = cycle_graph(5);
    Embedding e = embed_max_degree_sphere(g, 3, rng);
    expect_verified_on_sphere(g, e);
  }
  SUBCASE("Petersen in 4-space") {
    Graph g = petersen();
    Embedding e = embed_max_degree_sphere(g, 4, rng);
    CHECK(e.dim == 4);
    expect_verified_on_sphere(g, e);
    // block composition keeps edges exact well below the verify tolerance
    CHECK(verify_edges(g, e).max_edge_deviation <= 1e-12 * 4);
  }
  SUBCASE("degree too high") {
    CHECK_THROWS_AS(embed_max_degree_sphere(complete_graph(4), 3, rng), Error);
  }
}

TEST_CASE("embed_max_degree_sphere across dimensions") {
  Rng rng(5);
  for (int d = 2; d <= 8; ++d) {
    for (int it = 0; it < 10; ++it) {
      int n = 2 + static_cast<int>(rng.below(25));
      Graph g = random_graph_max_degree(n, d - 1, rng, 0.7);
      Embedding e = embed_max_degree_sphere(g, d, rng);
      expect_verified_on_sphere(g, e);
    }
  }
}

TEST_CASE("place_peeled_vertex") {
  Rng rng(6);
  Embedding empty(3, 0);
  SUBCASE("one neighbor pins one coordinate") {
    Vec nb = {kSphereRadius, 0.0, 0.0};
    Vec p = place_peeled_vertex(empty, {nb}, 3, rng);
    CHECK(std::fabs(p[0]) <= 1e-12);
    CHECK(std::fabs(norm(p) - kSphereRadius) <= 1e-12);
    CHECK(std::fabs(dist(p, nb) - 1.0) <= 1e-12);
  }
  SUBCASE("two orthogonal neighbors in d = 4") {
    Vec a(4, 0.0), b(4, 0.0);
    a[0] = kSphereRadius;
    b[1] = kSphereRadius;
    Embedding e4(4, 0);
    Vec p = place_peeled_vertex(e4, {a, b}, 4, rng);
    CHECK(std::fabs(dist(p, a) - 1.0) <= 1e-12);
    CHECK(std::fabs(dist(p, b) - 1.0) <= 1e-12);
  }
  SUBCASE("zero neighbors avoids existing points") {
    Embedding e(2, 1);
    e.pos[0] = {kSphereRadius, 0.0};
    Vec p = place_peeled_vertex(e, {}, 2, rng);
    CHECK(dist(p, e.pos[0]) >= 1e-6);
  }
  SUBCASE("too many neighbors") {
    Vec a(3, 0.0), b(3, 0.0);
    a[0] = kSphereRadius;
    b[1] = kSphereRadius;
    CHECK_THROWS_AS(place_peeled_vertex(empty, {a, b}, 3, rng), Error);
  }
}

TEST_CASE("embed_degenerate_sphere") {
  Rng rng(7);
  SUBCASE("trees are 1-degenerate") {
    Graph t(7);
    for (int v = 1; v < 7; ++v) t.add_edge(v, (v - 1) / 2);
    Embedding e = embed_degenerate_sphere(t, 3, rng);
    expect_verified_on_sphere(t, e);
  }
  SUBCASE("C_4 needs d = 4 under the threshold") {
    CHECK_THROWS_AS(embed_degenerate_sphere(cycle_graph(4), 3, rng), Error);
    Embedding e = embed_degenerate_sphere(cycle_graph(4), 4, rng);
    expect_verified_on_sphere(cycle_graph(4), e);
  }
  SUBCASE("K_d at dimension d+2") {
    for (int d = 2; d <= 5; ++d) {
      Graph g = complete_graph(d);
      Embedding e = embed_degenerate_sphere(g, d + 2, rng);
      expect_verified_on_sphere(g, e);
    }
  }
}

TEST_CASE("random degenerate graphs embed on the sphere") {
  Rng rng(8);
  for (int it = 0; it < 60; ++it) {
    int d = 3 + static_cast<int>(rng.below(6));
    int n = 2 + static_cast<int>(rng.below(25));
    Graph g = random_degenerate(n, d - 2, rng);
    Embedding e = embed_degenerate_sphere(g, d, rng);
    expect_verified_on_sphere(g, e);
  }
}

TEST_CASE("embed_cross_polytope") {
  SUBCASE("C_4 with both diagonals matched") {
    Graph g = cycle_graph(4);
    Embedding e = embed_cross_polytope(g, {{0, 2}, {1, 3}}, 2);
    expect_verified_on_sphere(g, e);
    CHECK(std::fabs(dist(e.pos[0], e.pos[2]) - 2.0 * kSphereRadius) <= 1e-12);
  }
  SUBCASE("the d-dimensional cross-polytope graph") {
    int d = 4;
    Graph g = cross_polytope_graph(d);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < d; ++i) pairs.emplace_back(i, i + d);
    Embedding e = embed_cross_polytope(g, pairs, d);
    CHECK(g.m() == 2 * d * (d - 1));
    expect_verified_on_sphere(g, e);
  }
  SUBCASE("K_d with no pairs") {
    Graph g = complete_graph(4);
    Embedding e = embed_cross_polytope(g, {}, 4);
    expect_verified_on_sphere(g, e);
  }
  SUBCASE("adjacent pair rejected") {
    Graph g = complete_graph(4);
    CHECK_THROWS_AS(embed_cross_polytope(g, {{0, 1}}, 3), Error);
  }
}

TEST_CASE("gp resampling stays cheap") {
  Rng rng(9);
  int total = 0, worst = 0;
  for (int it = 0; it < 50; ++it) {
    int n = 5 + static_cast<int>(rng.below(25));
    Graph g = random_graph_max_degree(n, 2, rng, 0.7);
    auto [e, cert] = embed_gp_s2(g, Frame::standard(3, 0, 3), rng);
    total += cert.resamples;
    worst = std::max(worst, cert.resamples);
  }
  CHECK(worst <= 50);
  CHECK(total <= 100);
}
