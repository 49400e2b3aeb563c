#pragma once

#include <utility>
#include <vector>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/partition.hpp"
#include "udg/rng.hpp"

namespace udg {

enum class EmbedMode { Euclid, Sphere };

// Deterministic combinatorial preparation of the odd case: the refined
// partition, the antipodal pairs the sphere part will reinsert, the B-matching
// over the long components of the second special part, the conflict sets of
// vertices whose sphere neighborhoods span one great circle, and the selected
// independent set W.
struct OddCasePlan {
  Partition partition;
  std::vector<std::pair<int, int>> exempt_pairs;
  std::vector<int> m_verts;
  std::vector<std::pair<int, int>> pairs;
  std::vector<ConflictSet> conflicts;
  std::vector<int> w;
};
OddCasePlan plan_odd_case(const Graph& g, int d);

// Geometric half of the odd case: circles + sphere + circle C + apexes for
// the plan's W. Every structural property the placement needs is re-checked,
// so hand-built plans (tests) fail loudly when invalid.
Embedding execute_odd_plan(const Graph& g, int d, const OddCasePlan& plan,
                           Rng& rng, int max_retries = 64);

// Edge threshold of the edge-bound induction: g(2)=3, g(3)=8, g(d)=C(d+2,2)-1.
long long edge_bound_g(int d);

// Max-degree-d graphs into d-space. Dispatches on d: lines/plane for d <= 2,
// the degree-3 sphere+apex construction for d = 3, the even/odd circle
// constructions for d >= 4. Throws K33Excluded for d = 3 inputs with a
// K_{3,3} component. max_retries caps the whole-construction redraws.
Embedding embed_max_degree(const Graph& g, int d, Rng& rng, int max_retries = 64);

Embedding embed_d3(const Graph& g, Rng& rng, int max_retries = 64);
Embedding embed_even(const Graph& g, int d, Rng& rng, int max_retries = 64);
Embedding embed_odd(const Graph& g, int d, Rng& rng, int max_retries = 64);

// Graphs with at most g(d) edges into d-space (mode Euclid) or onto the
// sphere (mode Sphere; additionally requires no K_{d+1} and no K_{d+2}-K_3).
Embedding embed_edge_bounded(const Graph& g, int d, EmbedMode mode, Rng& rng);

}  // namespace udg
