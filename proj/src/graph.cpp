#include "udg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "udg/error.hpp"

namespace udg {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
  require(u >= 0 && v >= 0 && u < n() && v < n(),
          ErrorKind::PreconditionViolated, "edge endpoint out of range");
  require(u != v, ErrorKind::PreconditionViolated, "self-loop");
  if (has_edge(u, v)) return;
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

Graph Graph::induced(const std::vector<int>& verts) const {
  std::vector<int> local(n(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    require(verts[i] >= 0 && verts[i] < n(), ErrorKind::PreconditionViolated,
            "induced vertex out of range");
    require(local[verts[i]] == -1, ErrorKind::PreconditionViolated,
            "induced vertex repeated");
    local[verts[i]] = i;
  }
  Graph h(static_cast<int>(verts.size()));
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    for (int w : adj_[verts[i]])
      if (local[w] > i) h.add_edge(i, local[w]);
  return h;
}

Graph Graph::complement() const {
  Graph h(n());
  for (int u = 0; u < n(); ++u)
    for (int v = u + 1; v < n(); ++v)
      if (!has_edge(u, v)) h.add_edge(u, v);
  return h;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n(), 0);
  for (int s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_independent(const std::vector<int>& verts) const {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (has_edge(verts[i], verts[j])) return false;
  return true;
}

namespace {

// Shared peel loop: condition(current_degree) decides removability.
template <typename Cond>
PeelResult peel_by(const Graph& g, Cond removable) {
  int n = g.n();
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  PeelResult res;
  for (;;) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && removable(deg[v])) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    std::vector<int> nbrs;
    for (int w : g.neighbors(pick))
      if (alive[w]) {
        nbrs.push_back(w);
        --deg[w];
      }
    alive[pick] = 0;
    res.order.push_back(pick);
    res.removed_neighbors.push_back(std::move(nbrs));
  }
  for (int v = 0; v < n; ++v)
    if (alive[v]) res.core.push_back(v);
  return res;
}

}  // namespace

PeelResult peel_min_degree(const Graph& g, int t) {
  require(t >= 0, ErrorKind::PreconditionViolated, "negative peel threshold");
  return peel_by(g, [t](int d) { return d <= t; });
}

PeelResult peel_exact_degree3(const Graph& g) {
  require(g.max_degree() <= 3, ErrorKind::PreconditionViolated,
          "peel_exact_degree3 needs max degree <= 3");
  PeelResult res = peel_by(g, [](int d) { return d == 3; });

  // Guarantees from the construction these feed into.
  check_internal(g.is_independent(res.order), "degree-3 peel: W not independent");
  std::vector<char> in_core(g.n(), 0);
  for (int v : res.core) in_core[v] = 1;
  for (std::size_t i = 0; i < res.order.size(); ++i) {
    check_internal(g.degree(res.order[i]) == 3,
                   "degree-3 peel: removed vertex degree != 3");
    for (int w : g.neighbors(res.order[i]))
      check_internal(in_core[w], "degree-3 peel: neighbor left the core");
  }
  Graph core = g.induced(res.core);
  check_internal(core.max_degree() <= 2, "degree-3 peel: core degree > 2");
  return res;
}

std::vector<PathOrCycle> decompose_degree2(const Graph& g) {
  require(g.max_degree() <= 2, ErrorKind::PreconditionViolated,
          "decompose_degree2 needs max degree <= 2");
  std::vector<PathOrCycle> out;
  for (const auto& comp : g.components()) {
    PathOrCycle pc;
    int start = -1;
    for (int v : comp)
      if (g.degree(v) <= 1) {
        start = v;
        break;
      }
    pc.cycle = (start == -1);
    if (pc.cycle) start = comp[0];

    int prev = -1, cur = start;
    for (;;) {
      pc.verts.push_back(cur);
      int next = -1;
      for (int w : g.neighbors(cur))  // sorted, so the walk is deterministic
        if (w != prev) {
          next = w;
          break;
        }
      if (next == -1) break;  // path end
      if (pc.cycle && next == start) break;
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(pc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Forbidden-subgraph search
// ---------------------------------------------------------------------------

namespace {

constexpr long long kNodeCap = 10'000'000;

struct CliqueSearch {
  const Graph& g;
  int target;
  long long nodes = 0;
  bool capped = false;
  std::vector<int> cur;
  std::vector<int> result;

  explicit CliqueSearch(const Graph& g_, int target_) : g(g_), target(target_) {}

  bool extend(const std::vector<int>& cand) {
    if (static_cast<int>(cur.size()) == target) {
      result = cur;
      return true;
    }
    if (++nodes > kNodeCap) {
      capped = true;
      return false;
    }
    int need = target - static_cast<int>(cur.size());
    if (static_cast<int>(cand.size()) < need) return false;
    for (std::size_t i = 0; i + need <= cand.size() + 0; ++i) {
      int v = cand[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
      cur.push_back(v);
      if (extend(next)) return true;
      cur.pop_back();
      if (capped) return false;
    }
    return false;
  }
};

// Smallest clique of the given size, by backtracking over vertices of degree
// >= min_deg. Empty when none; capped reported through *capped.
std::vector<int> find_clique(const Graph& g, int size, int min_deg,
                             bool* capped) {
  if (size <= 0) return {};
  std::vector<int> cand;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= min_deg) cand.push_back(v);
  CliqueSearch cs(g, size);
  cs.extend(cand);
  if (cs.capped) *capped = true;
  return cs.result;
}

}  // namespace

FindingSet find_forbidden(const Graph& g, int d) {
  FindingSet out;
  bool capped = false;

  // K_{d+1}: members need degree >= d.
  auto clique = find_clique(g, d + 1, d, &capped);
  if (!clique.empty()) out.clique = clique;

  // K_{d+2}-K_3: a (d-1)-clique whose common neighborhood has 3 further
  // vertices. Clique members are adjacent to d-2 clique mates and 3 triple
  // vertices, so need degree >= d+1.
  {
    std::vector<int> cand;
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) >= d + 1) cand.push_back(v);
    CliqueSearch cs(g, d - 1);

    struct Hook {
      const Graph& g;
      CliqueSearch& cs;
      FindingSet& out;
      bool search(const std::vector<int>& candidates) {
        if (static_cast<int>(cs.cur.size()) == cs.target) {
          std::vector<int> common;
          for (int v = 0; v < g.n(); ++v) {
            if (std::find(cs.cur.begin(), cs.cur.end(), v) != cs.cur.end())
              continue;
            bool all = true;
            for (int c : cs.cur)
              if (!g.has_edge(v, c)) {
                all = false;
                break;
              }
            if (all) common.push_back(v);
            if (common.size() == 3) break;
          }
          if (common.size() == 3) {
            Kd2MinusK3 w;
            w.clique = cs.cur;
            w.triple = {common[0], common[1], common[2]};
            out.kd2_minus_k3 = w;
            return true;
          }
          return false;
        }
        if (++cs.nodes > kNodeCap) {
          cs.capped = true;
          return false;
        }
        int need = cs.target - static_cast<int>(cs.cur.size());
        if (static_cast<int>(candidates.size()) < need) return false;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          int v = candidates[i];
          std::vector<int> next;
          for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
          cs.cur.push_back(v);
          if (search(next)) return true;
          cs.cur.pop_back();
          if (cs.capped) return false;
        }
        return false;
      }
    } hook{g, cs, out};

    if (d - 1 == 0) {
      // degenerate: any 3 vertices qualify
      if (g.n() >= 3) {
        Kd2MinusK3 w;
        w.triple = {0, 1, 2};
        out.kd2_minus_k3 = w;
      }
    } else {
      hook.search(cand);
      if (cs.capped) capped = true;
    }
  }

  // K_{3,3} as a connected component (the d=3 exclusion; under max degree 3
  // any K_{3,3} subgraph is a full component).
  if (d == 3) {
    for (const auto& comp : g.components()) {
      if (comp.size() != 6) continue;
      bool cubic = true;
      for (int v : comp)
        if (g.degree(v) != 3) {
          cubic = false;
          break;
        }
      if (!cubic) continue;
      // 2-color; 3-regular bipartite on 3+3 is K_{3,3}
      Graph h = g.induced(comp);
      std::vector<int> color(6, -1);
      std::queue<int> q;
      color[0] = 0;
      q.push(0);
      bool bip = true;
      while (!q.empty() && bip) {
        int v = q.front();
        q.pop();
        for (int w : h.neighbors(v)) {
          if (color[w] == -1) {
            color[w] = 1 - color[v];
            q.push(w);
          } else if (color[w] == color[v]) {
            bip = false;
            break;
          }
        }
      }
      if (!bip) continue;
      int side = std::count(color.begin(), color.end(), 0);
      if (side != 3) continue;
      bool complete = true;
      for (int a = 0; a < 6 && complete; ++a)
        for (int b = a + 1; b < 6 && complete; ++b)
          if (color[a] != color[b] && !h.has_edge(a, b)) complete = false;
      if (complete) {
        out.k33_component = comp;
        break;
      }
    }
  }

  out.decided = !capped;
  return out;
}

// ---------------------------------------------------------------------------
// Maximum matching (blossom contraction) on the complement
// ---------------------------------------------------------------------------

namespace {

// Standard O(V^3) blossom algorithm over an adjacency-matrix view.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : n_(g.n()), g_(g), match_(n_, -1), parent_(n_), base_(n_) {}

  std::vector<std::pair<int, int>> run() {
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1)
        for (int u : g_.neighbors(v))
          if (match_[u] == -1) {
            match_[v] = u;
            match_[u] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1) augment(v);
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v) out.emplace_back(v, match_[v]);
    return out;
  }

 private:
  int n_;
  const Graph& g_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;

  int lca(int a, int b) {
    std::vector<char> mark(n_, 0);
    for (;;) {
      a = base_[a];
      mark[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (mark[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<int> q{root};
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      int v = q[qi];
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int curbase = lca(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = curbase;
              if (!used_[i]) {
                used_[i] = 1;
                q.push_back(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int root) {
    int v = find_path(root);
    if (v == -1) return;
    while (v != -1) {
      int pv = parent_[v], ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
  }
};

}  // namespace

std::optional<std::vector<std::pair<int, int>>> complement_matching(
    const Graph& g, int k) {
  require(k >= 0, ErrorKind::PreconditionViolated, "negative matching size");
  if (k == 0) return std::vector<std::pair<int, int>>{};
  Graph comp = g.complement();
  auto matching = Blossom(comp).run();
  if (static_cast<int>(matching.size()) < k) return std::nullopt;
  matching.resize(k);
  for (auto [u, v] : matching)
    check_internal(!g.has_edge(u, v), "complement matching pair adjacent");
  return matching;
}

}  // namespace udg
