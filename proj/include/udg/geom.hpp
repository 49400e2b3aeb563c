#pragma once

#include <vector>

#include "udg/rng.hpp"

namespace udg {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
double dist(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double s);
void axpy(Vec& y, double a, const Vec& x);  // y += a*x

// radius of the sphere every spherical construction lives on: 1/sqrt(2)
extern const double kSphereRadius;

// Orthonormal basis of a linear subspace of d-space.
struct Frame {
  int dim = 0;
  std::vector<Vec> basis;

  int size() const { return static_cast<int>(basis.size()); }
  Vec embed(const Vec& local) const;  // sum_k local[k] * basis[k]

  // coordinate axes e_from .. e_{from+count-1} of d-space
  static Frame standard(int d, int from, int count);
};

struct SphereSpec {
  double radius = kSphereRadius;
  Vec center;  // empty = origin
};

// Orthonormal basis of the orthogonal complement of span(vectors) in d-space.
// Rank decided by pivoted Gram-Schmidt with tolerance 1e-10.
// Throws FullSpan when the vectors already span d-space.
Frame orthonormal_complement(const std::vector<Vec>& vectors, int d);

// Uniform point on frame-span intersected with the radius-sphere.
Vec sample_subsphere(const Frame& frame, double radius, Rng& rng);

// radius * (cos(theta) b1 + sin(theta) b2) for a 2-vector frame.
Vec circle_point(const Frame& plane, double radius, double theta);

// The two points at distance 1 from every point of pts, where pts lie on the
// radius-1/sqrt2 sphere and affinely span a hyperplane. on_sphere is set when
// the hyperplane passes through the origin (the "poles" case).
struct ApexPoints {
  Vec p_plus, p_minus;
  bool on_sphere = false;
};
ApexPoints apex_points(const std::vector<Vec>& pts, int d);

// m points in d-space with all pairwise distances = edge (m <= d+1).
std::vector<Vec> regular_simplex(int m, int d, double edge = 1.0);

// d+2 points realizing K_{d+2}-e: a regular facet of d points plus two
// apexes mirrored through its hyperplane. Every pair is at distance 1 except
// the apex pair (the last two points), whose distance is in (1, 2).
std::vector<Vec> glued_simplices(int d);

// m pairwise-orthogonal points of norm 1/sqrt2 inside the frame (m <= size);
// all pairwise distances are exactly 1.
std::vector<Vec> orthobasis_clique(int m, const Frame& frame);

// Solution set of |p - y_i| = 1 for all i: a sphere of the given radius
// around center inside center + span(directions). Throws NoSolution when the
// constraints are inconsistent or the circumradius exceeds 1.
struct UnitLocus {
  Vec center;
  double radius = 0.0;
  Frame directions;
};
UnitLocus unit_distance_locus(const std::vector<Vec>& pts, int d);

}  // namespace udg
