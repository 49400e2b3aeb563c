#pragma once

#include <utility>
#include <vector>

#include "udg/graph.hpp"
#include "udg/rng.hpp"

namespace udg {

struct Partition {
  std::vector<std::vector<int>> parts;  // disjoint cover of 0..n-1, sorted
  std::vector<int> caps;                // per-part max-degree targets
};

// Lovasz partition: G[parts[i]] has max degree <= caps[i]. Requires
// sum(caps) >= max_degree(G) - |caps| + 1 (the lemma's counting hypothesis).
// Local moves from a round-robin start (or a seeded shuffle when rng given);
// the potential sum_i(e(G[V_i]) - caps[i]|V_i|) strictly decreases per move,
// which is asserted.
Partition lovasz_partition(const Graph& g, const std::vector<int>& caps,
                           Rng* init_rng = nullptr);

// The refined partition: for even d, d/2 parts with max degree <= 1 except
// the last (<= 2), every degree-2 vertex of the last part having exactly 2
// neighbors in every part; for odd d, (d-1)/2 parts with the odd-clause
// guarantees on the last two parts. All clauses are asserted on output.
Partition refined_partition(const Graph& g, int d);

// A/B split of a path (>= 5 vertices) or cycle (length != 4) component:
// b_edges is a set of disjoint component edges avoiding path endpoints such
// that for either one-endpoint-per-edge selection W', the components of
// H[A u W'] have at most 4 vertices.
struct ABSplit {
  std::vector<int> a;
  std::vector<std::pair<int, int>> b_edges;
};
ABSplit split_path_cycle(const PathOrCycle& h);

// Sequentially removes current-degree-2 vertices of G[last_part]; the result
// is independent, each member has exactly 2 neighbors in last_part, and the
// remainder has max degree <= 1 (all asserted).
std::vector<int> select_w_even(const Graph& g, const std::vector<int>& last_part);

enum class ConflictKind { Triple, FourTuple };

struct ConflictSet {
  std::vector<int> members;  // 3 or 4 vertices, sorted
  ConflictKind kind = ConflictKind::Triple;
  std::vector<int> anchor;   // sphere vertices spanning the shared great circle
};

// Picks one endpoint per matching edge such that the choice is independent in
// the matching augmented with one conflict edge per triple and two disjoint
// conflict edges per 4-tuple; hence it meets every conflict set in <= 2
// vertices. The augmented graph is a union of two matchings, so 2-colorable.
std::vector<int> select_w_conflict_free(
    const std::vector<int>& m_verts,
    const std::vector<std::pair<int, int>>& pairs,
    const std::vector<ConflictSet>& conflicts);

}  // namespace udg
