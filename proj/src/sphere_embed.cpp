#include "udg/sphere_embed.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "udg/error.hpp"
#include "udg/verify.hpp"

namespace udg {

namespace {

constexpr double kAngleDelta = 1e-4;  // forbidden-angle rejection margin
constexpr double kMinGap = 1e-6;      // minimum separation between points

const double kTwoPi = 8.0 * std::atan(1.0);

// Edge deviation restricted to edges with both endpoints placed.
void assert_placed_edges_unit(const Graph& g, const Embedding& e,
                              const char* where) {
  for (auto [u, v] : g.edges()) {
    if (!e.placed(u) || !e.placed(v)) continue;
    check_internal(std::fabs(dist(e.pos[u], e.pos[v]) - 1.0) <= 1e-9, where);
  }
}

void assert_on_sphere(const Embedding& e, const char* where) {
  Tolerances tol;
  check_internal(verify_sphere(e, kSphereRadius, tol).pass, where);
}

}  // namespace

void place_chains_on_circle(Embedding& emb, const Frame& plane,
                            const std::vector<std::vector<int>>& chains,
                            bool forbid_antipodal_cross,
                            const std::vector<std::pair<int, int>>& forbidden_opposite,
                            Rng& rng) {
  require(plane.size() == 2, ErrorKind::PreconditionViolated,
          "circle placement needs a 2-plane");
  if (chains.empty()) return;

  int total = 0;
  for (const auto& c : chains) {
    require(!c.empty() && c.size() <= 4, ErrorKind::PreconditionViolated,
            "chains on a circle are limited to 4 vertices");
    total += static_cast<int>(c.size());
  }

  std::vector<int> verts;
  std::vector<double> angle;
  std::vector<int> chain_of;
  verts.reserve(total);

  for (int attempt = 0; attempt < 100; ++attempt) {
    verts.clear();
    angle.clear();
    chain_of.clear();
    for (std::size_t c = 0; c < chains.size(); ++c) {
      double theta = rng.uniform(0.0, kTwoPi);
      for (std::size_t k = 0; k < chains[c].size(); ++k) {
        verts.push_back(chains[c][k]);
        angle.push_back(theta + 0.25 * kTwoPi * static_cast<double>(k));
        chain_of.push_back(static_cast<int>(c));
      }
    }

    auto gap = [&](std::size_t i, std::size_t j) {
      double dfi = std::fmod(angle[i] - angle[j], kTwoPi);
      if (dfi < 0) dfi += kTwoPi;
      return dfi;  // in [0, 2pi)
    };
    bool ok = true;
    for (std::size_t i = 0; i < verts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < verts.size() && ok; ++j) {
        if (chain_of[i] == chain_of[j]) continue;  // exact quarter multiples
        double d = gap(i, j);
        if (d < kAngleDelta || kTwoPi - d < kAngleDelta) ok = false;
        if (forbid_antipodal_cross && std::fabs(d - 0.5 * kTwoPi) < kAngleDelta)
          ok = false;
      }
    if (ok) {
      for (auto [a, b] : forbidden_opposite) {
        std::size_t ia = verts.size(), ib = verts.size();
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (verts[i] == a) ia = i;
          if (verts[i] == b) ib = i;
        }
        check_internal(ia < verts.size() && ib < verts.size(),
                       "forbidden-opposite vertex not on this circle");
        if (std::fabs(gap(ia, ib) - 0.5 * kTwoPi) < kAngleDelta) ok = false;
      }
    }
    if (!ok) continue;

    // place: exact quarter turns from each chain's base point
    for (std::size_t c = 0; c < chains.size(); ++c) {
      double theta = 0.0;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (chain_of[i] == static_cast<int>(c) && verts[i] == chains[c][0])
          theta = angle[i];
      double x = kSphereRadius * std::cos(theta);
      double y = kSphereRadius * std::sin(theta);
      for (int v : chains[c]) {
        Vec p(plane.dim, 0.0);
        axpy(p, x, plane.basis[0]);
        axpy(p, y, plane.basis[1]);
        emb.pos[v] = std::move(p);
        double nx = -y, ny = x;  // rotate a quarter turn, exactly
        x = nx;
        y = ny;
      }
    }
    return;
  }
  fail(ErrorKind::ResampleExceeded, "circle angle redraw limit reached");
}

Embedding embed_matchings_on_circles(const Graph& g,
                                     const std::vector<std::vector<int>>& parts,
                                     int d, Rng& rng) {
  require(2 * static_cast<int>(parts.size()) <= d,
          ErrorKind::PreconditionViolated, "too many circles for the dimension");
  Embedding emb(d, g.n());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Graph h = g.induced(parts[i]);
    require(h.max_degree() <= 1, ErrorKind::PreconditionViolated,
            "circle part does not induce a matching");
    std::vector<std::vector<int>> chains;
    for (int lv = 0; lv < h.n(); ++lv) {
      if (h.degree(lv) == 0)
        chains.push_back({parts[i][lv]});
      else if (h.neighbors(lv)[0] > lv)
        chains.push_back({parts[i][lv], parts[i][h.neighbors(lv)[0]]});
    }
    Frame plane = Frame::standard(d, 2 * static_cast<int>(i), 2);
    place_chains_on_circle(emb, plane, chains, /*forbid_antipodal_cross=*/true,
                           {}, rng);
  }
  assert_placed_edges_unit(g, emb, "matchings-on-circles edge deviation");
  return emb;
}

// ---------------------------------------------------------------------------
// General-position embedding on the 2-sphere
// ---------------------------------------------------------------------------

namespace {

struct GpScan {
  bool ok = true;
  double p1 = std::numeric_limits<double>::infinity();
  double p2 = std::numeric_limits<double>::infinity();
  double p3 = std::numeric_limits<double>::infinity();
  double p4 = std::numeric_limits<double>::infinity();
  std::vector<std::array<int, 4>> flagged;
};

double det3(const Vec& a, const Vec& b, const Vec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) -
         a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

GpScan gp_scan(const std::vector<Vec>& local, const std::vector<int>& verts,
               const std::vector<std::pair<int, int>>& exempt, double eps) {
  GpScan s;
  int n = static_cast<int>(verts.size());
  auto exempt_pair = [&](int a, int b) {
    for (auto [x, y] : exempt)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };

  // P1: third-smallest |dist - 1| per vertex
  std::vector<double> devs;
  for (int i = 0; i < n; ++i) {
    devs.clear();
    for (int j = 0; j < n; ++j)
      if (j != i)
        devs.push_back(std::fabs(dist(local[verts[i]], local[verts[j]]) - 1.0));
    if (devs.size() >= 3) {
      std::nth_element(devs.begin(), devs.begin() + 2, devs.end());
      s.p1 = std::min(s.p1, devs[2]);
    }
  }
  if (s.p1 < eps) s.ok = false;

  // P4: no unexpected antipodal pair
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (exempt_pair(verts[i], verts[j])) continue;
      s.p4 = std::min(s.p4, norm(add(local[verts[i]], local[verts[j]])));
    }
  if (s.p4 < eps) s.ok = false;

  // P3: no three vertices on a great circle (linear dependence) unless an
  // exempt pair is involved
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (exempt_pair(verts[i], verts[j]) || exempt_pair(verts[i], verts[k]) ||
            exempt_pair(verts[j], verts[k]))
          continue;
        s.p3 = std::min(
            s.p3, std::fabs(det3(local[verts[i]], local[verts[j]], local[verts[k]])));
      }
  if (s.p3 < eps) s.ok = false;

  // P2: no four concyclic (= coplanar) vertices, exempting quadruples made of
  // two reinserted pairs; single-pair near-coplanar quadruples are flagged.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          Vec u = sub(local[verts[b]], local[verts[a]]);
          Vec v = sub(local[verts[c]], local[verts[a]]);
          Vec w = sub(local[verts[e]], local[verts[a]]);
          double det = std::fabs(det3(u, v, w));
          int q[4] = {verts[a], verts[b], verts[c], verts[e]};
          int hits = 0;
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
              if (exempt_pair(q[x], q[y])) ++hits;
          if (hits >= 2) continue;
          if (hits == 1) {
            if (det < eps) s.flagged.push_back({q[0], q[1], q[2], q[3]});
            continue;
          }
          s.p2 = std::min(s.p2, det);
        }
  if (s.p2 < eps) s.ok = false;

  return s;
}

}  // namespace

std::pair<Embedding, GpCertificate> embed_gp_s2(const Graph& g,
                                                const Frame& frame, Rng& rng,
                                                bool require_gp) {
  require(frame.size() == 3, ErrorKind::PreconditionViolated,
          "embed_gp_s2 needs a 3-dimensional frame");
  require(g.max_degree() <= 2, ErrorKind::PreconditionViolated,
          "embed_gp_s2 needs max degree <= 2");

  // one vertex per 4-cycle comes out and returns as an antipode
  std::vector<std::pair<int, int>> reinserted;  // (removed, opposite)
  std::vector<char> removed(g.n(), 0);
  for (const auto& pc : decompose_degree2(g)) {
    if (!pc.cycle || pc.verts.size() != 4) continue;
    int pos = static_cast<int>(
        std::min_element(pc.verts.begin(), pc.verts.end()) - pc.verts.begin());
    int a = pc.verts[pos];
    int opp = pc.verts[(pos + 2) % 4];
    removed[a] = 1;
    reinserted.emplace_back(a, opp);
  }
  std::vector<int> kept;
  for (int v = 0; v < g.n(); ++v)
    if (!removed[v]) kept.push_back(v);

  const int kMaxResamples = 1000;
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    std::vector<Vec> local(g.n());
    for (int v : kept) {
      std::vector<Vec> placed_nbrs;
      for (int w : g.neighbors(v))
        if (!removed[w] && !local[w].empty()) placed_nbrs.push_back(local[w]);
      Frame comp = orthonormal_complement(placed_nbrs, 3);
      local[v] = sample_subsphere(comp, kSphereRadius, rng);
    }
    for (auto [a, opp] : reinserted) local[a] = scaled(local[opp], -1.0);

    // distinctness (exempt pairs are at distance sqrt(2))
    bool distinct = true;
    for (int u = 0; u < g.n() && distinct; ++u)
      for (int v = u + 1; v < g.n() && distinct; ++v)
        if (dist(local[u], local[v]) < kMinGap) distinct = false;
    if (!distinct) continue;

    GpCertificate cert;
    cert.exempt_pairs = reinserted;
    cert.resamples = attempt;
    if (require_gp) {
      std::vector<int> all(g.n());
      for (int v = 0; v < g.n(); ++v) all[v] = v;
      GpScan s = gp_scan(local, all, reinserted, 1e-6);
      if (!s.ok) continue;
      cert.p1_margin = s.p1;
      cert.p2_margin = s.p2;
      cert.p3_margin = s.p3;
      cert.p4_margin = s.p4;
      cert.flagged_quads = s.flagged;
    }

    Embedding emb(frame.dim, g.n());
    for (int v = 0; v < g.n(); ++v) emb.pos[v] = frame.embed(local[v]);
    emb.retries = attempt;
    emb.trace.push_back("gp-s2");
    assert_placed_edges_unit(g, emb, "gp-s2 edge deviation");
    return {std::move(emb), std::move(cert)};
  }
  fail(ErrorKind::ResampleExceeded, "embed_gp_s2 resample limit reached");
}

// ---------------------------------------------------------------------------
// Recursive orthogonal split (max degree <= d-1)
// ---------------------------------------------------------------------------

Embedding embed_max_degree_sphere(const Graph& g, int d, Rng& rng) {
  require(d >= 2, ErrorKind::PreconditionViolated, "dimension must be >= 2");
  require(g.max_degree() <= d - 1, ErrorKind::PreconditionViolated,
          "max degree exceeds d-1");

  if (d == 2) {
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    Embedding emb = embed_matchings_on_circles(g, {all}, 2, rng);
    emb.trace.push_back("sphere-base-circle");
    return emb;
  }
  if (d == 3) {
    auto [emb, cert] = embed_gp_s2(g, Frame::standard(3, 0, 3), rng,
                                   /*require_gp=*/false);
    emb.trace.push_back("sphere-base-s2");
    return emb;
  }

  int k1 = (d - 2) / 2;
  int k2 = (d - 2) - k1;
  Partition part = lovasz_partition(g, {k1, k2});
  Embedding emb(d, g.n());
  Embedding sub1 = embed_max_degree_sphere(g.induced(part.parts[0]), k1 + 1, rng);
  Embedding sub2 = embed_max_degree_sphere(g.induced(part.parts[1]), k2 + 1, rng);
  emb.place_block(part.parts[0], sub1, 0);
  emb.place_block(part.parts[1], sub2, k1 + 1);
  emb.trace.push_back("sphere-split-d" + std::to_string(d));

  assert_placed_edges_unit(g, emb, "orthogonal split edge deviation");
  assert_on_sphere(emb, "orthogonal split off sphere");
  return emb;
}

Vec place_peeled_vertex(const Embedding& e, const std::vector<Vec>& neighbors,
                        int d, Rng& rng) {
  require(static_cast<int>(neighbors.size()) <= d - 2,
          ErrorKind::PreconditionViolated, "too many neighbors for a great circle");
  for (const auto& p : neighbors)
    if (std::fabs(norm(p) - kSphereRadius) > 1e-9)
      fail(ErrorKind::NotOnSphere, "peeled-vertex neighbor off the sphere");
  Frame comp = orthonormal_complement(neighbors, d);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vec p = sample_subsphere(comp, kSphereRadius, rng);
    if (e.min_gap_to(p) >= kMinGap) return p;
  }
  fail(ErrorKind::ResampleExceeded, "place_peeled_vertex kept colliding");
}

Embedding embed_degenerate_sphere(const Graph& g, int d, Rng& rng) {
  require(d >= 2, ErrorKind::PreconditionViolated, "dimension must be >= 2");
  PeelResult peel = peel_min_degree(g, d - 2);
  if (!peel.core.empty())
    fail(ErrorKind::NotDegenerate,
         "graph is not " + std::to_string(d - 2) + "-degenerate");

  Embedding emb(d, g.n());
  for (int i = static_cast<int>(peel.order.size()) - 1; i >= 0; --i) {
    std::vector<Vec> nbrs;
    for (int w : peel.removed_neighbors[i]) nbrs.push_back(emb.pos[w]);
    emb.pos[peel.order[i]] = place_peeled_vertex(emb, nbrs, d, rng);
  }
  emb.trace.push_back("degenerate-peel");
  assert_placed_edges_unit(g, emb, "degenerate peel edge deviation");
  assert_on_sphere(emb, "degenerate peel off sphere");
  return emb;
}

Embedding embed_cross_polytope(const Graph& h,
                               const std::vector<std::pair<int, int>>& matching,
                               int d) {
  int k = static_cast<int>(matching.size());
  require(h.n() == d + k, ErrorKind::PreconditionViolated,
          "cross-polytope needs |V| = d + k");
  require(k <= d, ErrorKind::PreconditionViolated, "more pairs than axes");

  std::vector<char> used(h.n(), 0);
  for (auto [u, v] : matching) {
    require(u != v && !used[u] && !used[v], ErrorKind::PreconditionViolated,
            "matching pairs overlap");
    require(!h.has_edge(u, v), ErrorKind::PreconditionViolated,
            "matched pair is adjacent");
    used[u] = used[v] = 1;
  }

  Embedding emb(d, h.n());
  int axis = 0;
  for (auto [u, v] : matching) {
    Vec p(d, 0.0), q(d, 0.0);
    p[axis] = kSphereRadius;
    q[axis] = -kSphereRadius;
    emb.pos[u] = std::move(p);
    emb.pos[v] = std::move(q);
    ++axis;
  }
  for (int v = 0; v < h.n(); ++v) {
    if (used[v]) continue;
    Vec p(d, 0.0);
    p[axis++] = kSphereRadius;
    emb.pos[v] = std::move(p);
  }
  emb.trace.push_back("cross-polytope");
  assert_placed_edges_unit(h, emb, "cross-polytope edge deviation");
  return emb;
}

}  // namespace udg
