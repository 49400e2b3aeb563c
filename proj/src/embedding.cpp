#include "udg/embedding.hpp"

#include <limits>

#include "udg/error.hpp"

namespace udg {

bool Embedding::all_placed() const {
  for (const auto& p : pos)
    if (p.empty()) return false;
  return true;
}

std::vector<double> Embedding::flat() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n()) * dim);
  for (const auto& p : pos) {
    require(!p.empty(), ErrorKind::MissingVertex, "unplaced vertex in flat()");
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

void Embedding::place_block(const std::vector<int>& verts, const Embedding& sub,
                            int dim_offset) {
  check_internal(static_cast<int>(verts.size()) == sub.n(),
                 "place_block size mismatch");
  check_internal(dim_offset + sub.dim <= dim, "place_block dimension overflow");
  for (int i = 0; i < sub.n(); ++i) {
    Vec p(dim, 0.0);
    for (int k = 0; k < sub.dim; ++k) p[dim_offset + k] = sub.pos[i][k];
    pos[verts[i]] = std::move(p);
  }
}

double Embedding::min_gap_to(const Vec& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& q : pos)
    if (!q.empty()) best = std::min(best, dist(p, q));
  return best;
}

}  // namespace udg
