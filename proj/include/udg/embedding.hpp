#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

// Coordinates for (a subset of) a graph's vertices. An empty position means
// the vertex is not placed yet; finished embedders place everything.
struct Embedding {
  int dim = 0;
  std::vector<Vec> pos;

  std::uint64_t seed = 0;
  int retries = 0;
  std::vector<std::string> trace;  // construction steps, for reporting

  Embedding() = default;
  Embedding(int dim_, int n) : dim(dim_), pos(n) {}

  int n() const { return static_cast<int>(pos.size()); }
  bool placed(int v) const { return !pos[v].empty(); }
  bool all_placed() const;

  // vertex-major flat copy; requires all placed
  std::vector<double> flat() const;

  // Copies sub's coordinates into this embedding: sub vertex i becomes
  // verts[i], its coordinates shifted to start at dim_offset (zero-padded).
  void place_block(const std::vector<int>& verts, const Embedding& sub,
                   int dim_offset);

  // Minimum distance from p to any placed point (+inf when none).
  double min_gap_to(const Vec& p) const;
};

}  // namespace udg
