#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace udg {

// Simple undirected graph on dense vertex ids 0..n-1. Adjacency lists are
// kept sorted; construction rejects self-loops and out-of-range ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // duplicate edges are ignored
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  int max_degree() const;

  // Induced subgraph on verts (relabelled 0..k-1 in the given order).
  Graph induced(const std::vector<int>& verts) const;
  Graph complement() const;
  std::vector<std::vector<int>> components() const;  // sorted, by min vertex
  bool is_independent(const std::vector<int>& verts) const;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

struct PeelResult {
  std::vector<int> order;  // removal order
  std::vector<std::vector<int>> removed_neighbors;  // alive neighbors at removal
  std::vector<int> core;  // remaining vertices, sorted
};

// Repeatedly removes the smallest-id vertex of current degree <= t.
PeelResult peel_min_degree(const Graph& g, int t);

// Repeatedly removes the smallest-id vertex of current degree exactly 3.
// Requires max degree <= 3. Asserts the guarantees the construction relies
// on: the removed set is independent, every removed vertex keeps its 3
// neighbors in the core, and the core has max degree <= 2.
PeelResult peel_exact_degree3(const Graph& g);

struct PathOrCycle {
  bool cycle = false;
  std::vector<int> verts;  // traversal order; cycles wrap around
};

// Requires max degree <= 2; isolated vertices come out as 1-vertex paths.
std::vector<PathOrCycle> decompose_degree2(const Graph& g);

struct Kd2MinusK3 {
  std::vector<int> clique;      // d-1 vertices adjacent to all others found
  std::array<int, 3> triple;    // the 3 vertices whose mutual edges are free
};

struct FindingSet {
  std::optional<std::vector<int>> clique;          // K_{d+1}
  std::optional<Kd2MinusK3> kd2_minus_k3;          // K_{d+2} - K_3
  std::optional<std::vector<int>> k33_component;   // probed only when d == 3
  bool decided = true;  // false if the search node cap was exhausted
};

// Searches for K_{d+1}, K_{d+2}-K_3 and (when d == 3) a K_{3,3} component.
// Backtracking with degree pruning, capped at 1e7 nodes.
FindingSet find_forbidden(const Graph& g, int d);

// k pairwise-disjoint non-adjacent vertex pairs (edges of the complement),
// or nullopt when no k such pairs exist. Maximum matching on the complement
// via blossom contraction.
std::optional<std::vector<std::pair<int, int>>> complement_matching(
    const Graph& g, int k);

}  // namespace udg
