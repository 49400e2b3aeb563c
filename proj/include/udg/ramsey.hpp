#pragma once

#include <cstdint>
#include <vector>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/rng.hpp"

namespace udg {

enum class EdgeColor : unsigned char { Red, Blue };

// Total 2-coloring of the complete graph on s vertices.
class Coloring {
 public:
  explicit Coloring(int s, EdgeColor fill = EdgeColor::Red);

  // bit i of mask colors pair #i (lexicographic) Blue
  static Coloring from_mask(int s, std::uint64_t mask);

  int s() const { return s_; }
  EdgeColor get(int u, int v) const { return color_[index(u, v)]; }
  void set(int u, int v, EdgeColor c) { color_[index(u, v)] = c; }

  Graph class_graph(EdgeColor c) const;
  Coloring restricted(const std::vector<int>& verts) const;

  static int pair_count(int s) { return s * (s - 1) / 2; }

 private:
  int index(int u, int v) const;
  int s_;
  std::vector<EdgeColor> color_;
};

struct RamseyResult {
  EdgeColor chosen = EdgeColor::Red;
  Embedding emb;
};

inline int ramsey_spherical_dim(int s) { return (s + 2) / 2; }  // ceil((s+1)/2)
inline int ramsey_euclidean_dim(int s) { return (s + 1) / 2; }  // ceil(s/2)

// One color class on the radius-1/sqrt2 sphere in ceil((s+1)/2) dimensions.
RamseyResult ramsey_spherical(const Coloring& col, Rng& rng);

// One color class in ceil(s/2)-space.
RamseyResult ramsey_euclidean(const Coloring& col, Rng& rng);

// Lower-bound witness graphs: K_{d+1} plus d-1 isolated vertices (spherical,
// 2d vertices) or K_{d+2} plus d isolated vertices (euclidean, 2d+2 vertices).
Graph ramsey_witness(bool spherical, int d);

}  // namespace udg
