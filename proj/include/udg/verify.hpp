#pragma once

#include <array>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/rng.hpp"

namespace udg {

struct Tolerances {
  double eps_edge = 1e-9;
  double eps_sphere = 1e-9;
  double eps_gp = 1e-6;
  double eps_distinct = 1e-6;
};

struct GpFinding {
  std::array<int, 4> quad{-1, -1, -1, -1};  // quad[3] = -1 for P1 findings
  double value = 0.0;   // coplanarity volume, or unit-distance count for P1
  bool exempt = false;
  bool flagged = false;  // near-coplanar with exactly one exempt pair
};

struct VerifyReport {
  double max_edge_deviation = 0.0;
  std::pair<int, int> worst_edge{-1, -1};
  double sphere_deviation = 0.0;
  int worst_vertex = -1;
  double distinct_min_gap = std::numeric_limits<double>::infinity();
  std::pair<int, int> closest_pair{-1, -1};
  std::vector<GpFinding> gp_findings;
  bool pass = false;
};

// Max edge-length deviation from 1; also reports the minimum inter-vertex
// gap. pass iff the edge deviation is within eps_edge.
VerifyReport verify_edges(const Graph& g, const Embedding& e,
                          const Tolerances& tol = {});

// Max deviation of vertex norms from radius. Vacuous pass when empty.
VerifyReport verify_sphere(const Embedding& e, double radius,
                           const Tolerances& tol = {});

// General-position check on a 2-sphere embedding (dim 3):
// Property 1 - no vertex has 3 or more others at distance within eps_gp of 1;
// Property 2 - no 4 vertices within eps_gp of coplanar, except quadruples made
// of two exempt antipodal pairs; quadruples containing exactly one exempt pair
// are flagged but do not fail.
VerifyReport verify_gp(const Embedding& e,
                       const std::vector<std::pair<int, int>>& exempt_pairs,
                       const Tolerances& tol = {});

// Independent least-squares realizability oracle: minimizes
// sum_edges (|x_u - x_v| - 1)^2 by gradient descent with backtracking line
// search from random starts. Returns an embedding only when the residual
// drops below 1e-18 and verify_edges passes at 1e-7; absence is inconclusive.
std::optional<Embedding> lsq_realize(const Graph& g, int d, Rng& rng,
                                     int restarts = 50, int iters = 3000);

}  // namespace udg
