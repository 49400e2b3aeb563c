#include "udg/ramsey.hpp"

#include <algorithm>
#include <string>

#include "udg/error.hpp"
#include "udg/geom.hpp"
#include "udg/sphere_embed.hpp"
#include "udg/verify.hpp"

namespace udg {

Coloring::Coloring(int s, EdgeColor fill)
    : s_(s), color_(pair_count(s), fill) {
  require(s >= 1, ErrorKind::PreconditionViolated, "coloring needs s >= 1");
}

Coloring Coloring::from_mask(int s, std::uint64_t mask) {
  Coloring c(s);
  for (int i = 0; i < pair_count(s); ++i)
    if (mask >> i & 1) c.color_[i] = EdgeColor::Blue;
  return c;
}

int Coloring::index(int u, int v) const {
  require(u != v && u >= 0 && v >= 0 && u < s_ && v < s_,
          ErrorKind::PreconditionViolated, "bad coloring pair");
  if (u > v) std::swap(u, v);
  return (2 * s_ - 1 - u) * u / 2 + (v - u - 1);
}

Graph Coloring::class_graph(EdgeColor c) const {
  Graph g(s_);
  for (int u = 0; u < s_; ++u)
    for (int v = u + 1; v < s_; ++v)
      if (get(u, v) == c) g.add_edge(u, v);
  return g;
}

Coloring Coloring::restricted(const std::vector<int>& verts) const {
  Coloring out(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      out.set(static_cast<int>(i), static_cast<int>(j),
              get(verts[i], verts[j]));
  return out;
}

namespace {

void assert_class_result(const Coloring& col, const RamseyResult& r,
                         bool sphere) {
  Graph g = col.class_graph(r.chosen);
  Tolerances tol;
  check_internal(verify_edges(g, r.emb, tol).pass, "ramsey class edges off");
  if (sphere)
    check_internal(verify_sphere(r.emb, kSphereRadius, tol).pass,
                   "ramsey class off sphere");
}

}  // namespace

RamseyResult ramsey_spherical(const Coloring& col, Rng& rng) {
  int s = col.s();
  int d = ramsey_spherical_dim(s);
  if (s == 1) {  // S^0: a single point of norm 1/sqrt2
    RamseyResult out;
    out.emb = Embedding(1, 1);
    out.emb.pos[0] = {kSphereRadius};
    return out;
  }
  Graph red = col.class_graph(EdgeColor::Red);
  Graph blue = col.class_graph(EdgeColor::Blue);

  RamseyResult out;
  if (red.max_degree() <= d - 1) {
    out.chosen = EdgeColor::Red;
    out.emb = embed_max_degree_sphere(red, d, rng);
  } else if (blue.max_degree() <= d - 1) {
    out.chosen = EdgeColor::Blue;
    out.emb = embed_max_degree_sphere(blue, d, rng);
  } else {
    // both classes have a vertex of degree >= d; they are distinct since the
    // total degree is s-1 <= 2d-2
    auto top_vertex = [&](const Graph& g) {
      int best = 0;
      for (int v = 1; v < s; ++v)
        if (g.degree(v) > g.degree(best)) best = v;
      return best;
    };
    int vr = top_vertex(red);
    int vb = top_vertex(blue);
    check_internal(vr != vb, "one vertex dominates both classes");
    check_internal(red.degree(vr) >= d && blue.degree(vb) >= d,
                   "expected high-degree vertices missing");

    std::vector<int> sub_verts;
    for (int v = 0; v < s; ++v)
      if (v != vr && v != vb) sub_verts.push_back(v);
    RamseyResult sub = ramsey_spherical(col.restricted(sub_verts), rng);
    check_internal(sub.emb.dim == d - 1, "ramsey recursion dimension drift");

    out.chosen = sub.chosen;
    // x carries the high degree in the chosen class, y in the other
    int x = (sub.chosen == EdgeColor::Red) ? vr : vb;
    int y = (sub.chosen == EdgeColor::Red) ? vb : vr;

    Embedding emb(d, s);
    emb.place_block(sub_verts, sub.emb, 0);

    if (col.get(vr, vb) != sub.chosen) {
      // the joining edge belongs to the other class: both at the poles
      Vec hi(d, 0.0), lo(d, 0.0);
      hi[d - 1] = kSphereRadius;
      lo[d - 1] = -kSphereRadius;
      emb.pos[x] = std::move(hi);
      emb.pos[y] = std::move(lo);
    } else {
      // chosen-colored edge xy: y goes onto the subsphere, x to a pole
      Graph chosen_graph = col.class_graph(sub.chosen);
      std::vector<Vec> nbrs;
      for (int u : chosen_graph.neighbors(y))
        if (u != x) nbrs.push_back(emb.pos[u]);
      check_internal(static_cast<int>(nbrs.size()) <= (d - 1) - 2,
                     "pole-side vertex has too many chosen neighbors");
      Embedding sub_view(d - 1, s);
      for (int v : sub_verts) {
        sub_view.pos[v] = Vec(emb.pos[v].begin(), emb.pos[v].end() - 1);
      }
      std::vector<Vec> nbrs_low;
      for (auto& p : nbrs) nbrs_low.emplace_back(p.begin(), p.end() - 1);
      Vec py = place_peeled_vertex(sub_view, nbrs_low, d - 1, rng);
      py.push_back(0.0);
      emb.pos[y] = std::move(py);
      Vec px(d, 0.0);
      px[d - 1] = kSphereRadius;
      emb.pos[x] = std::move(px);
    }
    emb.trace.push_back("ramsey-spherical-s" + std::to_string(s));
    out.emb = std::move(emb);
  }

  check_internal(out.emb.dim == d, "spherical dimension mismatch");
  assert_class_result(col, out, /*sphere=*/true);
  return out;
}

RamseyResult ramsey_euclidean(const Coloring& col, Rng& rng) {
  int s = col.s();
  int d = ramsey_euclidean_dim(s);
  require(s <= 2 * d, ErrorKind::PreconditionViolated, "s exceeds 2d");

  if (d == 0) fail(ErrorKind::PreconditionViolated, "need at least 2 vertices");

  Graph red = col.class_graph(EdgeColor::Red);
  Graph blue = col.class_graph(EdgeColor::Blue);

  auto high_count = [&](const Graph& g) {
    int c = 0;
    for (int v = 0; v < s; ++v)
      if (g.degree(v) >= d) ++c;
    return c;
  };

  RamseyResult out;
  const Graph* cls = nullptr;
  if (high_count(red) <= d) {
    out.chosen = EdgeColor::Red;
    cls = &red;
  } else {
    check_internal(high_count(blue) <= d,
                   "both classes have more than d high-degree vertices");
    out.chosen = EdgeColor::Blue;
    cls = &blue;
  }

  // X = high-degree vertices (<= d of them) on orthogonal axes; the rest
  // join one by one, on-sphere while they still have a pending neighbor.
  std::vector<int> xs;
  std::vector<char> pending(s, 1);
  Embedding emb(d, s);
  for (int v = 0; v < s; ++v)
    if (cls->degree(v) >= d) xs.push_back(v);
  check_internal(static_cast<int>(xs.size()) <= d, "more axes than dimensions");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Vec p(d, 0.0);
    p[i] = kSphereRadius;
    emb.pos[xs[i]] = std::move(p);
    pending[xs[i]] = 0;
  }

  // vertices with a pending chosen-class neighbor have <= d-2 placed ones
  for (;;) {
    int pick = -1;
    for (int v = 0; v < s && pick < 0; ++v) {
      if (!pending[v]) continue;
      for (int u : cls->neighbors(v))
        if (pending[u]) {
          pick = v;
          break;
        }
    }
    if (pick < 0) break;
    std::vector<Vec> nbrs;
    for (int u : cls->neighbors(pick))
      if (!pending[u]) nbrs.push_back(emb.pos[u]);
    check_internal(static_cast<int>(nbrs.size()) <= d - 2,
                   "on-sphere join with too many placed neighbors");
    emb.pos[pick] = place_peeled_vertex(emb, nbrs, d, rng);
    pending[pick] = 0;
  }

  // remaining vertices are independent in the chosen class: distance-1 loci
  for (int v = 0; v < s; ++v) {
    if (!pending[v]) continue;
    std::vector<Vec> nbrs;
    for (int u : cls->neighbors(v)) {
      check_internal(!pending[u], "pending neighbor in the independent stage");
      nbrs.push_back(emb.pos[u]);
    }
    if (nbrs.empty()) {  // isolated in the chosen class: any fresh point
      Frame full = Frame::standard(d, 0, d);
      for (int attempt = 0;; ++attempt) {
        check_internal(attempt < 100, "isolated placement collided");
        Vec p = sample_subsphere(full, kSphereRadius, rng);
        if (emb.min_gap_to(p) >= 1e-6) {
          emb.pos[v] = std::move(p);
          break;
        }
      }
      continue;
    }
    UnitLocus loc = unit_distance_locus(nbrs, d);
    for (int attempt = 0;; ++attempt) {
      check_internal(attempt < 100, "independent-stage placement collided");
      Vec p = loc.center;
      if (loc.radius > 0 && loc.directions.size() > 0)
        axpy(p, 1.0, sample_subsphere(loc.directions, loc.radius, rng));
      if (emb.min_gap_to(p) >= 1e-6) {
        emb.pos[v] = std::move(p);
        break;
      }
    }
  }

  emb.trace.push_back("ramsey-euclidean-s" + std::to_string(s));
  out.emb = std::move(emb);
  assert_class_result(col, out, /*sphere=*/false);
  return out;
}

Graph ramsey_witness(bool spherical, int d) {
  require(d >= 1, ErrorKind::PreconditionViolated, "witness needs d >= 1");
  int clique = spherical ? d + 1 : d + 2;
  int isolated = spherical ? d - 1 : d;
  Graph g(clique + isolated);
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace udg
