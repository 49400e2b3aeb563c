#include "udg/verify.hpp"

#include <algorithm>
#include <cmath>

#include "udg/error.hpp"
#include "udg/kernels.hpp"

namespace udg {

VerifyReport verify_edges(const Graph& g, const Embedding& e,
                          const Tolerances& tol) {
  require(g.n() == e.n(), ErrorKind::PreconditionViolated,
          "graph/embedding size mismatch");
  for (int v = 0; v < g.n(); ++v)
    require(e.placed(v), ErrorKind::MissingVertex,
            "vertex " + std::to_string(v) + " not embedded");

  VerifyReport rep;
  auto coords = e.flat();
  auto edges = g.edges();
  const auto& ops = kernels::active();
  if (!edges.empty()) {
    std::size_t worst = 0;
    rep.max_edge_deviation =
        ops.edge_deviation(coords.data(), e.dim, edges.data(), edges.size(), &worst);
    rep.worst_edge = edges[worst];
  }
  if (g.n() >= 2) {
    kernels::Edge pair{-1, -1};
    rep.distinct_min_gap = ops.min_pair_gap(coords.data(), g.n(), e.dim, &pair);
    rep.closest_pair = pair;
  }
  rep.pass = rep.max_edge_deviation <= tol.eps_edge;
  return rep;
}

VerifyReport verify_sphere(const Embedding& e, double radius,
                           const Tolerances& tol) {
  VerifyReport rep;
  std::vector<double> coords;
  int n = 0;
  for (const auto& p : e.pos)
    if (!p.empty()) {
      coords.insert(coords.end(), p.begin(), p.end());
      ++n;
    }
  if (n > 0) {
    int worst = -1;
    rep.sphere_deviation = kernels::active().norm_deviation(
        coords.data(), n, e.dim, radius, &worst);
    rep.worst_vertex = worst;
  }
  rep.pass = rep.sphere_deviation <= tol.eps_sphere;
  return rep;
}

VerifyReport verify_gp(const Embedding& e,
                       const std::vector<std::pair<int, int>>& exempt_pairs,
                       const Tolerances& tol) {
  require(e.dim == 3, ErrorKind::PreconditionViolated,
          "verify_gp expects a 2-sphere embedding (dim 3)");
  VerifyReport rep;
  rep.pass = true;

  std::vector<int> verts;
  for (int v = 0; v < e.n(); ++v)
    if (e.placed(v)) verts.push_back(v);
  int n = static_cast<int>(verts.size());
  // the quadruple scan is O(n^4); beyond 200 vertices only the first 200 are
  // scanned (inputs feeding this check are small parts, never full graphs)
  int quad_n = std::min(n, 200);

  auto is_exempt_pair = [&](int a, int b) {
    for (auto [x, y] : exempt_pairs)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };

  // Property 1: nobody has three unit-distance partners.
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (std::fabs(dist(e.pos[verts[i]], e.pos[verts[j]]) - 1.0) <= tol.eps_gp)
        ++count;
    }
    if (count >= 3) {
      GpFinding f;
      f.quad = {verts[i], -1, -1, -1};
      f.value = count;
      rep.gp_findings.push_back(f);
      rep.pass = false;
    }
  }

  // Property 2: coplanar quadruples (concyclic on the sphere).
  for (int a = 0; a < quad_n; ++a)
    for (int b = a + 1; b < quad_n; ++b)
      for (int c = b + 1; c < quad_n; ++c)
        for (int d = c + 1; d < quad_n; ++d) {
          const Vec& pa = e.pos[verts[a]];
          Vec u = sub(e.pos[verts[b]], pa);
          Vec v = sub(e.pos[verts[c]], pa);
          Vec w = sub(e.pos[verts[d]], pa);
          double det = u[0] * (v[1] * w[2] - v[2] * w[1]) -
                       u[1] * (v[0] * w[2] - v[2] * w[0]) +
                       u[2] * (v[0] * w[1] - v[1] * w[0]);
          if (std::fabs(det) >= tol.eps_gp) continue;
          int q[4] = {verts[a], verts[b], verts[c], verts[d]};
          int pair_hits = 0;
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
              if (is_exempt_pair(q[x], q[y])) ++pair_hits;
          GpFinding f;
          f.quad = {q[0], q[1], q[2], q[3]};
          f.value = std::fabs(det);
          if (pair_hits >= 2) {
            f.exempt = true;
          } else if (pair_hits == 1) {
            f.flagged = true;  // for review, not a failure
          } else {
            rep.pass = false;
          }
          rep.gp_findings.push_back(f);
        }

  return rep;
}

// ---------------------------------------------------------------------------
// Least-squares realizability oracle
// ---------------------------------------------------------------------------

std::optional<Embedding> lsq_realize(const Graph& g, int d, Rng& rng,
                                     int restarts, int iters) {
  const auto& ops = kernels::active();
  auto edges = g.edges();
  std::size_t nd = static_cast<std::size_t>(g.n()) * d;

  auto build = [&](const std::vector<double>& x) {
    Embedding emb(d, g.n());
    for (int v = 0; v < g.n(); ++v)
      emb.pos[v] = Vec(x.begin() + static_cast<std::size_t>(v) * d,
                       x.begin() + static_cast<std::size_t>(v + 1) * d);
    return emb;
  };

  for (int attempt = 0; attempt < restarts; ++attempt) {
    std::vector<double> x(nd);
    for (auto& c : x) c = rng.gaussian();
    if (edges.empty()) {
      // nothing to optimize; any distinct placement realizes the graph
      Embedding emb = build(x);
      emb.trace.push_back("lsq");
      return emb;
    }

    std::vector<double> grad(nd, 0.0), xnew(nd), gnew(nd);
    double f = ops.lsq_residual_grad(x.data(), g.n(), d, edges.data(),
                                     edges.size(), grad.data());
    double step = 1e-2;
    for (int it = 0; it < iters && f > 1e-20; ++it) {
      double g2 = 0.0;
      for (double gv : grad) g2 += gv * gv;
      if (g2 < 1e-30) break;

      // Armijo backtracking along -grad from the current (BB) step.
      double fnew = f;
      int halvings = 0;
      for (; halvings < 60; ++halvings) {
        for (std::size_t i = 0; i < nd; ++i) xnew[i] = x[i] - step * grad[i];
        std::fill(gnew.begin(), gnew.end(), 0.0);
        fnew = ops.lsq_residual_grad(xnew.data(), g.n(), d, edges.data(),
                                     edges.size(), gnew.data());
        if (fnew <= f - 1e-4 * step * g2) break;
        step *= 0.5;
      }
      if (halvings == 60) break;  // no descent possible at double precision

      // Barzilai-Borwein step for the next iteration
      double sy = 0.0, yy = 0.0;
      for (std::size_t i = 0; i < nd; ++i) {
        double s = xnew[i] - x[i];
        double y = gnew[i] - grad[i];
        sy += s * y;
        yy += y * y;
      }
      x.swap(xnew);
      grad.swap(gnew);
      f = fnew;
      step = (yy > 1e-300 && sy > 0.0) ? sy / yy : 1e-2;
      if (!(step > 1e-18) || !(step < 1e6)) step = 1e-2;
    }

    if (f < 1e-18) {
      Embedding emb = build(x);
      emb.trace.push_back("lsq");
      Tolerances check;
      check.eps_edge = 1e-7;
      if (verify_edges(g, emb, check).pass) return emb;
    }
  }
  return std::nullopt;
}

}  // namespace udg
