#pragma once

#include <array>
#include <utility>
#include <vector>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/partition.hpp"
#include "udg/rng.hpp"

namespace udg {

// What the general-position sampling of embed_gp_s2 measured. The exempt
// pairs are the antipodal pairs coming from 4-cycle reinsertion; margins are
// minima over the non-exempt configurations of each kind.
struct GpCertificate {
  std::vector<std::pair<int, int>> exempt_pairs;
  double p1_margin = 0.0;  // third-smallest |dist-1| per vertex, minimized
  double p2_margin = 0.0;  // coplanarity volume of quadruples
  double p3_margin = 0.0;  // |det| of vertex triples (great-circle test)
  double p4_margin = 0.0;  // |u + v| over non-exempt pairs (antipodality)
  std::vector<std::array<int, 4>> flagged_quads;
  int resamples = 0;
};

// Places path/4-cycle chains on the radius-1/sqrt2 circle of the given
// 2-plane; consecutive chain vertices sit a quarter turn apart, so chain
// edges have length exactly 1. Base angles are drawn generically and redrawn
// while any two vertices (cross-chain) coincide, any cross-chain pair is
// antipodal when forbid_antipodal_cross is set, or a forbidden_opposite pair
// is antipodal.
void place_chains_on_circle(Embedding& emb, const Frame& plane,
                            const std::vector<std::vector<int>>& chains,
                            bool forbid_antipodal_cross,
                            const std::vector<std::pair<int, int>>& forbidden_opposite,
                            Rng& rng);

// Each part (inducing max degree <= 1) goes on the circle in coordinates
// (2i, 2i+1); matched pairs sit a quarter turn apart. No two vertices of one
// circle coincide or are antipodal.
Embedding embed_matchings_on_circles(const Graph& g,
                                     const std::vector<std::vector<int>>& parts,
                                     int d, Rng& rng);

// Max-degree-2 graph on the 2-sphere inside the given 3-frame: one vertex per
// 4-cycle is removed, the rest sampled sequentially from the orthogonal
// complement of placed neighbors, the removed vertices reinserted antipodally.
// With require_gp the general-position properties are checked and the whole
// embedding redrawn on failure.
std::pair<Embedding, GpCertificate> embed_gp_s2(const Graph& g,
                                                const Frame& frame, Rng& rng,
                                                bool require_gp = true);

// Proposition-style recursion: split by a Lovasz partition into orthogonal
// subspheres until max degree <= 1 (circle) or <= 2 (2-sphere). Requires max
// degree <= d-1, d >= 2; output lies on the radius-1/sqrt2 sphere.
Embedding embed_max_degree_sphere(const Graph& g, int d, Rng& rng);

// A point of the sphere orthogonal to all neighbors (hence at distance 1
// from each), at least 1e-6 away from every already-placed point.
Vec place_peeled_vertex(const Embedding& e, const std::vector<Vec>& neighbors,
                        int d, Rng& rng);

// (d-2)-degenerate graphs: embeds the peel order in reverse.
Embedding embed_degenerate_sphere(const Graph& g, int d, Rng& rng);

// Matched pairs at +-(1/sqrt2)e_i, unmatched vertices at remaining axes.
// Requires the pairs to be disjoint and non-adjacent, |V| = d + k, k <= d.
Embedding embed_cross_polytope(const Graph& h,
                               const std::vector<std::pair<int, int>>& matching,
                               int d);

}  // namespace udg
