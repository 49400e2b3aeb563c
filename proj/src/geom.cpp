#include "udg/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "udg/error.hpp"
#include "udg/kernels.hpp"

namespace udg {

const double kSphereRadius = std::sqrt(0.5);

double dot(const Vec& a, const Vec& b) {
  return kernels::active().dot(a.data(), b.data(), static_cast<int>(a.size()));
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double dist(const Vec& a, const Vec& b) {
  return std::sqrt(
      kernels::active().dist2(a.data(), b.data(), static_cast<int>(a.size())));
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec scaled(const Vec& a, double s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

void axpy(Vec& y, double a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Vec Frame::embed(const Vec& local) const {
  Vec p(dim, 0.0);
  for (int k = 0; k < size(); ++k) axpy(p, local[k], basis[k]);
  return p;
}

Frame Frame::standard(int d, int from, int count) {
  Frame f;
  f.dim = d;
  for (int k = 0; k < count; ++k) {
    Vec e(d, 0.0);
    e[from + k] = 1.0;
    f.basis.push_back(std::move(e));
  }
  return f;
}

namespace {

// Appends to `basis` an orthonormal set spanning (with basis) span(basis,
// cand), choosing pivots by largest residual norm. Residuals below
// tol * max(1, original norm) count as dependent.
void orthonormalize_into(std::vector<Vec>& basis, std::vector<Vec> cand, double tol) {
  std::vector<double> norm0(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i) norm0[i] = norm(cand[i]);
  std::vector<char> used(cand.size(), 0);

  for (auto& c : cand)
    for (const auto& b : basis) axpy(c, -dot(b, c), b);

  for (;;) {
    int pick = -1;
    double best = 0.0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (used[i]) continue;
      double r = norm(cand[i]);
      if (r > best && r > tol * std::max(1.0, norm0[i])) {
        best = r;
        pick = static_cast<int>(i);
      }
    }
    if (pick < 0) break;
    used[pick] = 1;
    Vec q = scaled(cand[pick], 1.0 / best);
    for (const auto& b : basis) axpy(q, -dot(b, q), b);  // second pass
    q = scaled(q, 1.0 / norm(q));
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (!used[i]) axpy(cand[i], -dot(q, cand[i]), q);
    basis.push_back(std::move(q));
  }
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, double tol) {
  std::vector<Vec> basis;
  orthonormalize_into(basis, vectors, tol);
  return basis;
}

}  // namespace

Frame orthonormal_complement(const std::vector<Vec>& vectors, int d) {
  for (const auto& v : vectors)
    require(static_cast<int>(v.size()) == d, ErrorKind::PreconditionViolated,
            "vector dimension mismatch");
  std::vector<Vec> basis = span_basis(vectors, 1e-10);
  int rank = static_cast<int>(basis.size());
  if (rank == d) fail(ErrorKind::FullSpan, "complement is {0}");

  std::vector<Vec> axes;
  for (int j = 0; j < d; ++j) {
    Vec e(d, 0.0);
    e[j] = 1.0;
    axes.push_back(std::move(e));
  }
  std::size_t before = basis.size();
  orthonormalize_into(basis, axes, 1e-8);
  Frame f;
  f.dim = d;
  f.basis.assign(basis.begin() + before, basis.end());
  check_internal(static_cast<int>(f.basis.size()) == d - rank,
                 "complement dimension mismatch");
  return f;
}

Vec sample_subsphere(const Frame& frame, double radius, Rng& rng) {
  require(frame.size() >= 1, ErrorKind::PreconditionViolated, "empty frame");
  Vec coef(frame.size());
  double r;
  do {
    for (auto& c : coef) c = rng.gaussian();
    r = std::sqrt(std::inner_product(coef.begin(), coef.end(), coef.begin(), 0.0));
  } while (r < 1e-8);
  Vec p(frame.dim, 0.0);
  for (int k = 0; k < frame.size(); ++k)
    axpy(p, radius * coef[k] / r, frame.basis[k]);
  return p;
}

Vec circle_point(const Frame& plane, double radius, double theta) {
  require(plane.size() == 2, ErrorKind::PreconditionViolated,
          "circle_point needs a 2-vector frame");
  Vec p(plane.dim, 0.0);
  axpy(p, radius * std::cos(theta), plane.basis[0]);
  axpy(p, radius * std::sin(theta), plane.basis[1]);
  return p;
}

ApexPoints apex_points(const std::vector<Vec>& pts, int d) {
  require(static_cast<int>(pts.size()) >= d, ErrorKind::PreconditionViolated,
          "apex_points needs at least d points");
  for (const auto& x : pts) {
    require(static_cast<int>(x.size()) == d, ErrorKind::PreconditionViolated,
            "point dimension mismatch");
    if (std::fabs(norm(x) - kSphereRadius) > 1e-9)
      fail(ErrorKind::NotOnSphere, "apex_points input off the sphere");
  }

  // Affine hull: directions from pts[0]; must span a hyperplane.
  std::vector<Vec> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i)
    dirs.push_back(sub(pts[i], pts[0]));
  std::vector<Vec> hull = span_basis(dirs, 1e-10);
  if (static_cast<int>(hull.size()) != d - 1)
    fail(ErrorKind::DegenerateSpan, "points do not span an affine hyperplane");

  // c = projection of the origin onto the hull (closest point of H to o).
  Vec c = pts[0];
  for (const auto& u : hull) axpy(c, -dot(u, pts[0]), u);

  Frame nf = orthonormal_complement(hull, d);
  check_internal(nf.size() == 1, "hyperplane normal not 1-dimensional");
  const Vec& n = nf.basis[0];

  double c2 = dot(c, c);
  double rho2 = 0.5 - c2;
  check_internal(rho2 > -1e-9, "circumscribed subsphere radius imaginary");
  double s = std::sqrt(std::max(0.0, 1.0 - std::max(0.0, rho2)));

  ApexPoints ap;
  ap.p_plus = add(c, scaled(n, s));
  ap.p_minus = sub(c, scaled(n, s));
  ap.on_sphere = std::sqrt(c2) < 1e-10;
  for (const auto& x : pts) {
    check_internal(std::fabs(dist(ap.p_plus, x) - 1.0) <= 1e-10,
                   "apex point not at distance 1");
    check_internal(std::fabs(dist(ap.p_minus, x) - 1.0) <= 1e-10,
                   "apex point not at distance 1");
  }
  return ap;
}

std::vector<Vec> regular_simplex(int m, int d, double edge) {
  require(m >= 1 && m <= d + 1, ErrorKind::PreconditionViolated,
          "regular_simplex needs m <= d+1");
  // centroid lift: each new point sits above the centroid of the previous.
  std::vector<Vec> pts;
  pts.emplace_back(d, 0.0);
  for (int k = 1; k < m; ++k) {
    Vec g(d, 0.0);
    for (const auto& p : pts) axpy(g, 1.0 / k, p);
    // the centroid is equidistant from all previous points
    double r2 = kernels::active().dist2(g.data(), pts[0].data(), d);
    double h = std::sqrt(edge * edge - r2);
    Vec p = g;
    p[k - 1] += h;
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Vec> glued_simplices(int d) {
  require(d >= 2, ErrorKind::PreconditionViolated, "glued_simplices needs d >= 2");
  // Facet = first d points of a regular (d+1)-simplex; apexes mirrored in the
  // facet hyperplane (the facet has zero last coordinate by construction).
  std::vector<Vec> pts = regular_simplex(d + 1, d, 1.0);
  Vec apex2 = pts.back();
  apex2[d - 1] = -apex2[d - 1];
  pts.push_back(std::move(apex2));

  double gap = dist(pts[d], pts[d + 1]);
  check_internal(gap > 1.0 + 1e-9 && gap < 2.0 - 1e-9,
                 "apex pair distance outside (1, 2)");
  return pts;
}

std::vector<Vec> orthobasis_clique(int m, const Frame& frame) {
  require(m <= frame.size(), ErrorKind::PreconditionViolated,
          "orthobasis_clique needs m <= frame size");
  std::vector<Vec> pts;
  for (int i = 0; i < m; ++i)
    pts.push_back(scaled(frame.basis[i], kSphereRadius));
  return pts;
}

UnitLocus unit_distance_locus(const std::vector<Vec>& pts, int d) {
  require(!pts.empty(), ErrorKind::PreconditionViolated,
          "unit_distance_locus needs at least one point");
  std::vector<Vec> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i)
    dirs.push_back(sub(pts[i], pts[0]));
  std::vector<Vec> ubasis = span_basis(dirs, 1e-10);

  // Circumcenter within the affine hull: w . (y_i - y_0) = |y_i - y_0|^2 / 2.
  Vec w(d, 0.0);
  if (!ubasis.empty()) {
    // Solve via normal equations in the orthonormal basis: for each
    // constraint i, sum_k beta_k (u_k . d_i) = |d_i|^2 / 2.
    int r = static_cast<int>(ubasis.size());
    std::vector<std::vector<double>> ata(r, std::vector<double>(r, 0.0));
    std::vector<double> atb(r, 0.0);
    for (const auto& di : dirs) {
      std::vector<double> row(r);
      for (int k = 0; k < r; ++k) row[k] = dot(ubasis[k], di);
      double rhs = 0.5 * dot(di, di);
      for (int a = 0; a < r; ++a) {
        atb[a] += row[a] * rhs;
        for (int b = 0; b < r; ++b) ata[a][b] += row[a] * row[b];
      }
    }
    // Gaussian elimination with partial pivoting on the small SPD system.
    std::vector<double> beta(r, 0.0);
    for (int col = 0; col < r; ++col) {
      int piv = col;
      for (int i = col + 1; i < r; ++i)
        if (std::fabs(ata[i][col]) > std::fabs(ata[piv][col])) piv = i;
      std::swap(ata[piv], ata[col]);
      std::swap(atb[piv], atb[col]);
      check_internal(std::fabs(ata[col][col]) > 1e-14,
                     "singular circumcenter system");
      for (int i = col + 1; i < r; ++i) {
        double fct = ata[i][col] / ata[col][col];
        for (int j = col; j < r; ++j) ata[i][j] -= fct * ata[col][j];
        atb[i] -= fct * atb[col];
      }
    }
    for (int i = r - 1; i >= 0; --i) {
      double s = atb[i];
      for (int j = i + 1; j < r; ++j) s -= ata[i][j] * beta[j];
      beta[i] = s / ata[i][i];
    }
    for (int k = 0; k < r; ++k) axpy(w, beta[k], ubasis[k]);
    // consistency on every constraint
    for (const auto& di : dirs)
      if (std::fabs(dot(w, di) - 0.5 * dot(di, di)) > 1e-7)
        fail(ErrorKind::NoSolution, "inconsistent distance constraints");
  }

  UnitLocus loc;
  loc.center = add(pts[0], w);
  double circum2 = dot(w, w);
  if (circum2 > 1.0 + 1e-9)
    fail(ErrorKind::NoSolution, "circumradius exceeds 1");
  loc.radius = std::sqrt(std::max(0.0, 1.0 - circum2));
  loc.directions = orthonormal_complement(ubasis, d);
  return loc;
}

}  // namespace udg
