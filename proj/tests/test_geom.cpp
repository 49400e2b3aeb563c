#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "udg/error.hpp"
#include "udg/geom.hpp"
#include "udg/rng.hpp"

using namespace udg;

namespace {

void check_orthonormal(const Frame& f, double eps = 1e-12) {
  for (int i = 0; i < f.size(); ++i)
    for (int j = i; j < f.size(); ++j) {
      double want = i == j ? 1.0 : 0.0;
      CHECK(std::fabs(dot(f.basis[i], f.basis[j]) - want) <= eps);
    }
}

}  // namespace

TEST_CASE("orthonormal_complement basics") {
  Frame f = orthonormal_complement({{1, 0, 0}}, 3);
  CHECK(f.size() == 2);
  check_orthonormal(f);
  for (const auto& b : f.basis) CHECK(std::fabs(b[0]) <= 1e-12);

  Frame full = orthonormal_complement({}, 2);
  CHECK(full.size() == 2);
  check_orthonormal(full);

  // near-duplicate column collapses to rank 1
  Frame nd = orthonormal_complement({{1, 0, 0}, {1, 1e-14, 0}}, 3);
  CHECK(nd.size() == 2);
  check_orthonormal(nd);

  CHECK_THROWS_AS(orthonormal_complement({{1, 0}, {0, 1}}, 2), Error);
}

TEST_CASE("complement frames stay orthonormal on random input") {
  Rng rng(3);
  for (int it = 0; it < 200; ++it) {
    int d = 2 + static_cast<int>(rng.below(7));
    int k = static_cast<int>(rng.below(d));
    std::vector<Vec> vs;
    for (int i = 0; i < k; ++i) {
      Vec v(d);
      for (auto& c : v) c = rng.gaussian();
      vs.push_back(std::move(v));
    }
    Frame f = orthonormal_complement(vs, d);
    CHECK(f.size() >= d - k);
    check_orthonormal(f);
    for (const auto& b : f.basis)
      for (const auto& v : vs) CHECK(std::fabs(dot(b, v)) <= 1e-9 * (1 + norm(v)));
  }
}

TEST_CASE("sample_subsphere geometry") {
  Rng rng(17);
  // 1-dim frame: a 0-sphere
  Frame line = Frame::standard(3, 1, 1);
  bool plus = false, minus = false;
  for (int i = 0; i < 64; ++i) {
    Vec p = sample_subsphere(line, 2.0, rng);
    CHECK(std::fabs(std::fabs(p[1]) - 2.0) <= 1e-12);
    CHECK(p[0] == 0.0);
    (p[1] > 0 ? plus : minus) = true;
  }
  CHECK(plus);
  CHECK(minus);

  Frame full2 = Frame::standard(2, 0, 2);
  for (int i = 0; i < 32; ++i) {
    Vec p = sample_subsphere(full2, kSphereRadius, rng);
    CHECK(std::fabs(p[0] * p[0] + p[1] * p[1] - 0.5) <= 1e-12);
  }

  Frame perp = orthonormal_complement({{1, 0, 0}}, 3);
  for (int i = 0; i < 32; ++i) {
    Vec p = sample_subsphere(perp, 1.0, rng);
    CHECK(std::fabs(p[0]) <= 1e-12);
    CHECK(std::fabs(norm(p) - 1.0) <= 1e-12);
  }
}

TEST_CASE("sample_subsphere uniformity smoke test") {
  Rng rng(99);
  Frame f = Frame::standard(3, 0, 3);
  Vec mean(3, 0.0);
  const int kSamples = 10000;
  for (int i = 0; i < kSamples; ++i)
    axpy(mean, 1.0 / kSamples, sample_subsphere(f, 1.0, rng));
  CHECK(norm(mean) <= 0.05);
}

TEST_CASE("circle_point chord identities") {
  Frame plane = Frame::standard(2, 0, 2);
  double r = kSphereRadius;
  Vec a = circle_point(plane, r, 0.0);
  Vec b = circle_point(plane, r, 2.0 * std::atan(1.0));  // pi/2
  CHECK(std::fabs(dist(a, b) - 1.0) <= 1e-12);

  Vec anti = circle_point(plane, r, 4.0 * std::atan(1.0));
  CHECK(std::fabs(dist(a, anti) - 2.0 * r) <= 1e-12);

  Vec c = circle_point(plane, r, 4.0 * std::atan(1.0) / 3.0);  // pi/3
  CHECK(std::fabs(dist(a, c) - r) <= 1e-12);  // chord 2r sin(pi/6) = r
}

TEST_CASE("apex_points worked examples") {
  double r = kSphereRadius;
  SUBCASE("orthogonal triple") {
    ApexPoints ap = apex_points({{r, 0, 0}, {0, r, 0}, {0, 0, r}}, 3);
    CHECK(!ap.on_sphere);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::fabs(ap.p_plus[k] - r) <= 1e-12);
      CHECK(std::fabs(ap.p_minus[k] + std::sqrt(2.0) / 6.0) <= 1e-12);
    }
    CHECK(std::fabs(norm(ap.p_minus) - 1.0 / std::sqrt(6.0)) <= 1e-12);
  }
  SUBCASE("great circle gives on-sphere poles") {
    ApexPoints ap = apex_points({{r, 0, 0}, {-r, 0, 0}, {0, r, 0}}, 3);
    CHECK(ap.on_sphere);
    CHECK(std::fabs(std::fabs(ap.p_plus[2]) - r) <= 1e-10);
    CHECK(std::fabs(ap.p_plus[0]) <= 1e-10);
    CHECK(std::fabs(ap.p_plus[1]) <= 1e-10);
  }
  SUBCASE("two points in the plane") {
    ApexPoints ap = apex_points({{r, 0}, {0, r}}, 2);
    CHECK(!ap.on_sphere);
    CHECK(std::fabs(dist(ap.p_plus, {r, 0}) - 1.0) <= 1e-10);
    CHECK(std::fabs(dist(ap.p_minus, {0, r}) - 1.0) <= 1e-10);
  }
  SUBCASE("error paths") {
    // duplicated point: affine span drops below a hyperplane
    CHECK_THROWS_AS(apex_points({{r, 0, 0}, {-r, 0, 0}, {r, 0, 0}}, 3), Error);
    CHECK_THROWS_AS(apex_points({{0.9, 0, 0}, {0, r, 0}, {0, 0, r}}, 3), Error);
  }
}

TEST_CASE("apex distance property on random on-sphere hyperplanes") {
  Rng rng(7);
  for (int it = 0; it < 100; ++it) {
    int d = 2 + static_cast<int>(rng.below(6));
    Frame full = Frame::standard(d, 0, d);
    std::vector<Vec> pts;
    for (int i = 0; i < d; ++i)
      pts.push_back(sample_subsphere(full, kSphereRadius, rng));
    ApexPoints ap;
    try {
      ap = apex_points(pts, d);
    } catch (const Error&) {
      continue;  // degenerate draw
    }
    for (const auto& x : pts) {
      CHECK(std::fabs(dist(ap.p_plus, x) - 1.0) <= 1e-10);
      CHECK(std::fabs(dist(ap.p_minus, x) - 1.0) <= 1e-10);
    }
    CHECK(dist(ap.p_plus, ap.p_minus) > 1e-8);
  }
}

TEST_CASE("regular_simplex pairwise distances") {
  auto two = regular_simplex(2, 1);
  CHECK(std::fabs(dist(two[0], two[1]) - 1.0) <= 1e-12);

  auto tri = regular_simplex(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(std::fabs(dist(tri[i], tri[j]) - 1.0) <= 1e-12);

  auto five = regular_simplex(5, 4);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      CHECK(std::fabs(dist(five[i], five[j]) - 1.0) <= 1e-12);

  CHECK_THROWS_AS(regular_simplex(4, 2), Error);
}

TEST_CASE("glued_simplices structure") {
  SUBCASE("rhombus at d = 2") {
    auto pts = glued_simplices(2);
    REQUIRE(pts.size() == 4);
    CHECK(std::fabs(dist(pts[2], pts[3]) - std::sqrt(3.0)) <= 1e-12);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!(i == 2 && j == 3))
          CHECK(std::fabs(dist(pts[i], pts[j]) - 1.0) <= 1e-12);
  }
  SUBCASE("bipyramid apex gap at d = 3") {
    auto pts = glued_simplices(3);
    CHECK(std::fabs(dist(pts[3], pts[4]) - 2.0 * std::sqrt(2.0 / 3.0)) <= 1e-12);
  }
  SUBCASE("all unit pairs up to d = 10") {
    for (int d = 2; d <= 10; ++d) {
      auto pts = glued_simplices(d);
      REQUIRE(static_cast<int>(pts.size()) == d + 2);
      for (int i = 0; i < d + 2; ++i)
        for (int j = i + 1; j < d + 2; ++j) {
          if (i == d && j == d + 1) {
            double gap = dist(pts[i], pts[j]);
            CHECK(gap < 2.0);
            CHECK(gap > 1.0);
          } else {
            CHECK(std::fabs(dist(pts[i], pts[j]) - 1.0) <= 1e-12);
          }
        }
    }
  }
}

TEST_CASE("orthobasis_clique") {
  auto pts = orthobasis_clique(2, Frame::standard(2, 0, 2));
  CHECK(std::fabs(pts[0][0] - kSphereRadius) <= 1e-15);
  CHECK(std::fabs(pts[1][1] - kSphereRadius) <= 1e-15);
  CHECK(std::fabs(dist(pts[0], pts[1]) - 1.0) <= 1e-12);

  Rng rng(5);
  Frame sub = orthonormal_complement({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}, 5);
  auto three = orthobasis_clique(3, sub);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::fabs(norm(three[i]) - kSphereRadius) <= 1e-12);
    for (int j = i + 1; j < 3; ++j)
      CHECK(std::fabs(dist(three[i], three[j]) - 1.0) <= 1e-12);
  }

  CHECK(orthobasis_clique(1, Frame::standard(4, 0, 4)).size() == 1);
  CHECK_THROWS_AS(orthobasis_clique(3, Frame::standard(2, 0, 2)), Error);
}

TEST_CASE("unit_distance_locus") {
  Rng rng(13);
  SUBCASE("single point: the whole unit sphere around it") {
    UnitLocus loc = unit_distance_locus({{1.0, 2.0, 3.0}}, 3);
    CHECK(loc.radius == doctest::Approx(1.0));
    CHECK(loc.directions.size() == 3);
    Vec p = add(loc.center, sample_subsphere(loc.directions, loc.radius, rng));
    CHECK(std::fabs(dist(p, {1.0, 2.0, 3.0}) - 1.0) <= 1e-12);
  }
  SUBCASE("two points at distance sqrt2: a circle") {
    UnitLocus loc = unit_distance_locus({{0, 0, 0}, {std::sqrt(2.0), 0, 0}}, 3);
    CHECK(loc.directions.size() == 2);
    CHECK(loc.radius == doctest::Approx(std::sqrt(0.5)));
    for (int i = 0; i < 8; ++i) {
      Vec p = add(loc.center, sample_subsphere(loc.directions, loc.radius, rng));
      CHECK(std::fabs(dist(p, {0, 0, 0}) - 1.0) <= 1e-12);
      CHECK(std::fabs(dist(p, {std::sqrt(2.0), 0, 0}) - 1.0) <= 1e-12);
    }
  }
  SUBCASE("too far apart") {
    CHECK_THROWS_AS(unit_distance_locus({{0, 0, 0}, {2.5, 0, 0}}, 3), Error);
  }
}
