#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "testutil.hpp"
#include "udg/error.hpp"
#include "udg/euclid_embed.hpp"
#include "udg/verify.hpp"

using namespace udg;
using namespace testutil;

namespace {

void expect_verified(const Graph& g, const Embedding& e, int dim) {
  CHECK(e.dim == dim);
  VerifyReport r = verify_edges(g, e);
  CHECK(r.pass);
  CHECK(r.max_edge_deviation <= 1e-9);
  if (g.n() >= 2) CHECK(r.distinct_min_gap >= 1e-6);
}

}  // namespace

TEST_CASE("edge bound table") {
  CHECK(edge_bound_g(2) == 3);
  CHECK(edge_bound_g(3) == 8);
  CHECK(edge_bound_g(4) == 14);
  CHECK(edge_bound_g(5) == 20);
  CHECK(edge_bound_g(6) == 27);
}

TEST_CASE("embed_max_degree low dimensions") {
  Rng rng(1);
  SUBCASE("d = 1: matchings on the line") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    expect_verified(g, embed_max_degree(g, 1, rng), 1);
    CHECK_THROWS_AS(embed_max_degree(path_graph(3), 1, rng), Error);
  }
  SUBCASE("d = 2: paths and cycles in the plane") {
    Graph g = disjoint_union(cycle_graph(5), path_graph(6));
    expect_verified(g, embed_max_degree(g, 2, rng), 2);
    Graph big = disjoint_union(cycle_graph(3), disjoint_union(cycle_graph(4), path_graph(9)));
    expect_verified(big, embed_max_degree(big, 2, rng), 2);
  }
}

TEST_CASE("embed_d3 examples") {
  Rng rng(2);
  SUBCASE("K_4: one apex over an orthogonal triangle") {
    expect_verified(complete_graph(4), embed_d3(complete_graph(4), rng), 3);
  }
  SUBCASE("cube graph") {
    expect_verified(cube_q3(), embed_d3(cube_q3(), rng), 3);
  }
  SUBCASE("C_6 reduces to the sphere embedding") {
    expect_verified(cycle_graph(6), embed_d3(cycle_graph(6), rng), 3);
  }
  SUBCASE("K_{3,3} is excluded") {
    try {
      embed_d3(complete_bipartite(3, 3), rng);
      FAIL("expected K33Excluded");
    } catch (const Error& e) {
      CHECK(e.kind == ErrorKind::K33Excluded);
    }
  }
  SUBCASE("K_{3,3} plus another component is still excluded") {
    Graph g = disjoint_union(complete_bipartite(3, 3), cycle_graph(5));
    CHECK_THROWS_AS(embed_d3(g, rng), Error);
  }
}

TEST_CASE("embed_even examples") {
  Rng rng(3);
  SUBCASE("K_5 at d = 4: ten unit edges") {
    Graph g = complete_graph(5);
    Embedding e = embed_max_degree(g, 4, rng);
    CHECK(g.m() == 10);
    expect_verified(g, e, 4);
  }
  SUBCASE("4-regular circulant at d = 4") {
    Graph g = circulant(8, {1, 2});
    CHECK(g.m() == 16);
    expect_verified(g, embed_even(g, 4, rng), 4);
  }
  SUBCASE("two disjoint K_5 at d = 4") {
    Graph g = disjoint_union(complete_graph(5), complete_graph(5));
    CHECK(g.m() == 20);
    expect_verified(g, embed_even(g, 4, rng), 4);
  }
  SUBCASE("perfect matching: W stays empty") {
    Graph g(8);
    for (int i = 0; i < 8; i += 2) g.add_edge(i, i + 1);
    expect_verified(g, embed_even(g, 4, rng), 4);
  }
}

TEST_CASE("embed_odd examples") {
  Rng rng(4);
  SUBCASE("5-regular circulant at d = 5") {
    Graph g = circulant(12, {1, 2, 6});
    REQUIRE(g.max_degree() == 5);
    CHECK(g.m() == 30);
    expect_verified(g, embed_odd(g, 5, rng), 5);
  }
  SUBCASE("random 5-regular-ish graph at d = 5") {
    Graph g = random_graph_max_degree(20, 5, rng, 0.9);
    expect_verified(g, embed_odd(g, 5, rng), 5);
  }
  SUBCASE("weaker input accepted") {
    Graph g = random_graph_max_degree(14, 4, rng, 0.8);
    expect_verified(g, embed_odd(g, 5, rng), 5);
  }
}

TEST_CASE("embed_max_degree dispatch across dimensions") {
  Rng rng(5);
  for (int d = 1; d <= 8; ++d) {
    for (int it = 0; it < 8; ++it) {
      int n = 2 + static_cast<int>(rng.below(30));
      Graph g = random_graph_max_degree(n, d, rng, 0.8);
      if (d == 3 && find_forbidden(g, 3).k33_component) continue;
      expect_verified(g, embed_max_degree(g, d, rng), d);
    }
  }
}

TEST_CASE("random cubic graphs at d = 3 never fail") {
  Rng rng(6);
  int done = 0, retries = 0;
  for (int it = 0; done < 1000; ++it) {
    int n = 4 + static_cast<int>(rng.below(57));
    Graph g = random_graph_max_degree(n, 3, rng, 0.85);
    if (find_forbidden(g, 3).k33_component) continue;
    Embedding e = embed_d3(g, rng);
    expect_verified(g, e, 3);
    retries += e.retries;
    ++done;
  }
  CHECK(retries <= 2000);  // apex collisions stay rare
}

TEST_CASE("embed_edge_bounded fixtures") {
  Rng rng(7);
  SUBCASE("K_6 - e at d = 4 through glued simplices") {
    Graph g = complete_graph(6);
    Graph ke(6);
    for (auto [u, v] : g.edges())
      if (!(u == 0 && v == 1)) ke.add_edge(u, v);
    CHECK(ke.m() == 14);
    Embedding e = embed_edge_bounded(ke, 4, EmbedMode::Euclid, rng);
    VerifyReport r = verify_edges(ke, e);
    CHECK(r.pass);
    CHECK(r.max_edge_deviation <= 1e-12);
    CHECK(dist(e.pos[0], e.pos[1]) < 2.0);  // the glued-apex pair
    CHECK(dist(e.pos[0], e.pos[1]) > 1.0);
  }
  SUBCASE("triangle plus isolated edges at d = 2") {
    Graph g = disjoint_union(cycle_graph(3), Graph(2));
    expect_verified(g, embed_edge_bounded(g, 2, EmbedMode::Euclid, rng), 2);
  }
  SUBCASE("the claw at d = 2 goes through glued simplices") {
    Graph star = complete_bipartite(1, 3);
    expect_verified(star, embed_edge_bounded(star, 2, EmbedMode::Euclid, rng), 2);
  }
  SUBCASE("K_5 at d = 4 goes through the clique-apex branch") {
    Graph g = complete_graph(5);
    CHECK(g.m() == 10);
    expect_verified(g, embed_edge_bounded(g, 4, EmbedMode::Euclid, rng), 4);
  }
  SUBCASE("K_5 plus pendant trees at d = 4") {
    Graph g(8);
    for (auto [u, v] : complete_graph(5).edges()) g.add_edge(u, v);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    expect_verified(g, embed_edge_bounded(g, 4, EmbedMode::Euclid, rng), 4);
  }
  SUBCASE("too many edges") {
    CHECK_THROWS_AS(embed_edge_bounded(complete_graph(6), 4, EmbedMode::Euclid, rng),
                    Error);
  }
  SUBCASE("sphere mode rejects forbidden subgraphs") {
    try {
      embed_edge_bounded(complete_graph(5), 4, EmbedMode::Sphere, rng);
      FAIL("expected ForbiddenSubgraphForSphere");
    } catch (const Error& e) {
      CHECK(e.kind == ErrorKind::ForbiddenSubgraphForSphere);
    }
  }
  SUBCASE("sphere mode embeds a clean graph on the sphere") {
    Graph g = petersen();
    CHECK(g.m() == 15);
    CHECK(g.m() <= edge_bound_g(5));
    Embedding e = embed_edge_bounded(g, 5, EmbedMode::Sphere, rng);
    CHECK(verify_sphere(e, kSphereRadius).pass);
    expect_verified(g, e, 5);
  }
}

TEST_CASE("random edge-bounded graphs embed") {
  Rng rng(8);
  SUBCASE("d = 4, up to 14 edges") {
    for (int it = 0; it < 60; ++it) {
      int n = 2 + static_cast<int>(rng.below(15));
      int m = static_cast<int>(rng.below(15));
      Graph g = random_graph_with_edges(n, m, rng);
      expect_verified(g, embed_edge_bounded(g, 4, EmbedMode::Euclid, rng), 4);
    }
  }
  SUBCASE("d = 5, up to 20 edges") {
    for (int it = 0; it < 60; ++it) {
      int n = 2 + static_cast<int>(rng.below(17));
      int m = static_cast<int>(rng.below(21));
      Graph g = random_graph_with_edges(n, m, rng);
      expect_verified(g, embed_edge_bounded(g, 5, EmbedMode::Euclid, rng), 5);
    }
  }
  SUBCASE("d = 3, up to 8 edges") {
    for (int it = 0; it < 60; ++it) {
      int n = 2 + static_cast<int>(rng.below(10));
      int m = static_cast<int>(rng.below(9));
      Graph g = random_graph_with_edges(n, m, rng);
      expect_verified(g, embed_edge_bounded(g, 3, EmbedMode::Euclid, rng), 3);
    }
  }
  SUBCASE("sphere mode on clean random graphs") {
    for (int it = 0; it < 60; ++it) {
      int d = 3 + static_cast<int>(rng.below(3));
      int n = 2 + static_cast<int>(rng.below(12));
      int m = static_cast<int>(rng.below(edge_bound_g(d) + 1));
      Graph g = random_graph_with_edges(n, m, rng);
      FindingSet ff = find_forbidden(g, d);
      if (ff.clique || ff.kd2_minus_k3) continue;
      Embedding e = embed_edge_bounded(g, d, EmbedMode::Sphere, rng);
      expect_verified(g, e, d);
      CHECK(verify_sphere(e, kSphereRadius).pass);
    }
  }
}

namespace {

// Gadget with a forced conflicting set: k five-cycles whose B-vertices all
// read their sphere neighborhoods from 4-cycle diagonals. Returns the graph
// and a hand-built plan; execute_odd_plan re-checks the plan's validity.
struct ConflictGadget {
  Graph g;
  OddCasePlan plan;
};

ConflictGadget triple_gadget() {
  // V1 = three 5-cycles (ids 5i..5i+4); V2 = 4-cycle 15-16-17-18, c = 19,
  // absorbers 20..25. Each B-vertex w_i = 5i has N1 = {15, 17, 19}, where
  // (15, 17) is the diagonal the sphere embedding pins antipodally.
  std::vector<std::pair<int, int>> E;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 5; ++k) E.push_back({5 * i + k, 5 * i + (k + 1) % 5});
  E.push_back({15, 16});
  E.push_back({16, 17});
  E.push_back({17, 18});
  E.push_back({18, 15});
  for (int i = 0; i < 3; ++i) {
    E.push_back({5 * i, 15});
    E.push_back({5 * i, 17});
    E.push_back({5 * i, 19});
  }
  // remaining cycle vertices get 3 distinct cross neighbors each, greedy by
  // remaining capacity (16 and 18 hold 3, each absorber holds 5)
  std::vector<std::pair<int, int>> cap = {{16, 3}, {18, 3}, {20, 5}, {21, 5},
                                          {22, 5}, {23, 5}, {24, 5}, {25, 5}};
  for (int i = 0; i < 3; ++i)
    for (int k = 1; k < 5; ++k) {
      std::stable_sort(cap.begin(), cap.end(),
                       [](auto a, auto b) { return a.second > b.second; });
      for (int t = 0; t < 3; ++t) {
        E.push_back({5 * i + k, cap[t].first});
        cap[t].second--;
      }
    }
  ConflictGadget cg{Graph::from_edges(26, E), {}};
  cg.plan.partition.caps = {2, 2};
  cg.plan.partition.parts.resize(2);
  for (int v = 0; v < 15; ++v) cg.plan.partition.parts[0].push_back(v);
  for (int v = 15; v < 26; ++v) cg.plan.partition.parts[1].push_back(v);
  cg.plan.exempt_pairs = {{15, 17}};
  for (int i = 0; i < 3; ++i) {
    cg.plan.pairs.push_back({5 * i, 5 * i + 1});
    cg.plan.m_verts.push_back(5 * i);
    cg.plan.m_verts.push_back(5 * i + 1);
  }
  ConflictSet t;
  t.members = {0, 5, 10};
  t.kind = ConflictKind::Triple;
  t.anchor = {15, 17, 19};
  cg.plan.conflicts = {t};
  cg.plan.w = select_w_conflict_free(cg.plan.m_verts, cg.plan.pairs,
                                     cg.plan.conflicts);
  return cg;
}

ConflictGadget fourtuple_gadget() {
  // V1 = four 5-cycles (ids 5i..5i+4, i < 4); V2 = two 4-cycles
  // 20-21-22-23 and 24-25-26-27 (diagonals (20,22) and (24,26)) plus
  // absorbers 28..35. The four B-vertices read 3-subsets of the diagonal
  // quadruple {20, 22, 24, 26}, so they compete for one pole pair.
  std::vector<std::pair<int, int>> E;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 5; ++k) E.push_back({5 * i + k, 5 * i + (k + 1) % 5});
  for (int c = 0; c < 2; ++c) {
    int b = 20 + 4 * c;
    E.push_back({b, b + 1});
    E.push_back({b + 1, b + 2});
    E.push_back({b + 2, b + 3});
    E.push_back({b + 3, b});
  }
  int quad[4] = {20, 22, 24, 26};
  int n1s[4][3] = {{20, 22, 24}, {20, 22, 26}, {20, 24, 26}, {22, 24, 26}};
  for (int i = 0; i < 4; ++i)
    for (int t = 0; t < 3; ++t) E.push_back({5 * i, n1s[i][t]});
  std::vector<std::pair<int, int>> cap = {{21, 3}, {23, 3}, {25, 3}, {27, 3}};
  for (int k = 28; k < 36; ++k) cap.push_back({k, 5});
  for (int i = 0; i < 4; ++i)
    for (int k = 1; k < 5; ++k) {
      std::stable_sort(cap.begin(), cap.end(),
                       [](auto a, auto b) { return a.second > b.second; });
      for (int t = 0; t < 3; ++t) {
        E.push_back({5 * i + k, cap[t].first});
        cap[t].second--;
      }
    }
  ConflictGadget cg{Graph::from_edges(36, E), {}};
  cg.plan.partition.caps = {2, 2};
  cg.plan.partition.parts.resize(2);
  for (int v = 0; v < 20; ++v) cg.plan.partition.parts[0].push_back(v);
  for (int v = 20; v < 36; ++v) cg.plan.partition.parts[1].push_back(v);
  cg.plan.exempt_pairs = {{20, 22}, {24, 26}};
  for (int i = 0; i < 4; ++i) {
    cg.plan.pairs.push_back({5 * i, 5 * i + 1});
    cg.plan.m_verts.push_back(5 * i);
    cg.plan.m_verts.push_back(5 * i + 1);
  }
  ConflictSet q;
  q.members = {0, 5, 10, 15};
  q.kind = ConflictKind::FourTuple;
  q.anchor = {quad[0], quad[1], quad[2], quad[3]};
  cg.plan.conflicts = {q};
  cg.plan.w = select_w_conflict_free(cg.plan.m_verts, cg.plan.pairs,
                                     cg.plan.conflicts);
  return cg;
}

}  // namespace

TEST_CASE("odd case with a conflicting triple: poles are shared correctly") {
  ConflictGadget cg = triple_gadget();
  REQUIRE(cg.g.max_degree() == 5);
  Rng rng(2024);
  Embedding e = execute_odd_plan(cg.g, 5, cg.plan, rng);
  VerifyReport r = verify_edges(cg.g, e);
  CHECK(r.pass);
  CHECK(r.max_edge_deviation <= 1e-9);

  // at most two conflict members enter W, and those land exactly on the
  // sphere (the poles of the shared great circle)
  int conflict_in_w = 0, poles = 0;
  for (int w : cg.plan.w) {
    bool in_conflict = w == 0 || w == 5 || w == 10;
    conflict_in_w += in_conflict;
    if (std::fabs(norm(e.pos[w]) - kSphereRadius) <= 1e-9) {
      ++poles;
      CHECK(in_conflict);
    }
  }
  CHECK(conflict_in_w == 2);
  CHECK(poles == 2);
  CHECK(norm(add(e.pos[15], e.pos[17])) <= 1e-9);  // the pinned diagonal
}

TEST_CASE("odd case with a conflicting 4-tuple") {
  ConflictGadget cg = fourtuple_gadget();
  REQUIRE(cg.g.max_degree() == 5);
  Rng rng(4048);
  Embedding e = execute_odd_plan(cg.g, 5, cg.plan, rng);
  VerifyReport r = verify_edges(cg.g, e);
  CHECK(r.pass);
  CHECK(r.max_edge_deviation <= 1e-9);

  int conflict_in_w = 0;
  for (int w : cg.plan.w)
    conflict_in_w += (w % 5 == 0);
  CHECK(conflict_in_w <= 2);

  // the full pipeline also digests the gadget with its own partition
  Embedding own = embed_odd(cg.g, 5, rng);
  CHECK(verify_edges(cg.g, own).pass);
}
