#include "udg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "udg/error.hpp"

namespace udg {

namespace {

// Degrees of v into each part under the given assignment.
std::vector<int> part_degrees(const Graph& g, const std::vector<int>& part,
                              int alpha, int v) {
  std::vector<int> deg(alpha, 0);
  for (int w : g.neighbors(v)) ++deg[part[w]];
  return deg;
}

long long inpart_edge_sum(const Graph& g, const std::vector<int>& part) {
  long long s = 0;
  for (auto [u, v] : g.edges())
    if (part[u] == part[v]) ++s;
  return s;
}

std::vector<std::vector<int>> collect_parts(const std::vector<int>& part,
                                            int alpha) {
  std::vector<std::vector<int>> parts(alpha);
  for (int v = 0; v < static_cast<int>(part.size()); ++v)
    parts[part[v]].push_back(v);
  return parts;
}

// Local search minimizing sum_i e(G[V_i]): move any vertex whose in-part
// degree strictly exceeds its degree into some other part (destination with
// smallest degree, then smallest index). Returns number of moves.
long long minimize_inpart_edges(const Graph& g, std::vector<int>& part,
                                int alpha) {
  long long moves = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < g.n(); ++v) {
      auto deg = part_degrees(g, part, alpha, v);
      int own = deg[part[v]];
      int best_j = -1, best_d = own;
      for (int j = 0; j < alpha; ++j) {
        if (j == part[v]) continue;
        if (deg[j] < best_d) {
          best_d = deg[j];
          best_j = j;
        }
      }
      if (best_j >= 0) {
        part[v] = best_j;
        ++moves;
        moved = true;
      }
    }
  }
  return moves;
}

}  // namespace

Partition lovasz_partition(const Graph& g, const std::vector<int>& caps,
                           Rng* init_rng) {
  int alpha = static_cast<int>(caps.size());
  require(alpha >= 1, ErrorKind::PreconditionViolated, "no parts requested");
  long long sum = 0;
  for (int c : caps) {
    require(c >= 0, ErrorKind::PreconditionViolated, "negative cap");
    sum += c;
  }
  require(sum >= g.max_degree() - alpha + 1, ErrorKind::PreconditionViolated,
          "caps below the lemma's counting hypothesis");

  std::vector<int> part(g.n());
  for (int v = 0; v < g.n(); ++v) part[v] = v % alpha;
  if (init_rng)
    for (int v = 0; v < g.n(); ++v)
      part[v] = static_cast<int>(init_rng->below(alpha));

  // potential sum_i (e(G[V_i]) - caps[i] |V_i|); every move drops it by >= 1
  auto phi = [&]() {
    long long p = inpart_edge_sum(g, part);
    std::vector<long long> count(alpha, 0);
    for (int v = 0; v < g.n(); ++v) ++count[part[v]];
    for (int i = 0; i < alpha; ++i) p -= static_cast<long long>(caps[i]) * count[i];
    return p;
  };

  long long cur_phi = phi();
  for (;;) {
    int mv = -1, dest = -1;
    for (int v = 0; v < g.n() && mv < 0; ++v) {
      auto deg = part_degrees(g, part, alpha, v);
      if (deg[part[v]] <= caps[part[v]]) continue;
      int best_j = -1, best_d = 0;
      for (int j = 0; j < alpha; ++j) {
        if (j == part[v] || deg[j] > caps[j]) continue;
        if (best_j < 0 || deg[j] < best_d) {
          best_j = j;
          best_d = deg[j];
        }
      }
      check_internal(best_j >= 0, "Lovasz move target missing");
      mv = v;
      dest = best_j;
    }
    if (mv < 0) break;
    part[mv] = dest;
    long long next_phi = phi();
    check_internal(next_phi <= cur_phi - 1, "Lovasz potential did not decrease");
    cur_phi = next_phi;
  }

  Partition out;
  out.caps = caps;
  out.parts = collect_parts(part, alpha);
  for (int i = 0; i < alpha; ++i)
    check_internal(g.induced(out.parts[i]).max_degree() <= caps[i],
                   "Lovasz cap violated on output");
  return out;
}

// ---------------------------------------------------------------------------
// Refined partition feeding the circle constructions
// ---------------------------------------------------------------------------

namespace {

struct RefineCheck {
  bool ok = true;
  std::string why;
  void expect(bool c, const char* msg) {
    if (ok && !c) {
      ok = false;
      why = msg;
    }
  }
};

RefineCheck check_even_clauses(const Graph& g, const std::vector<int>& part,
                               int alpha) {
  RefineCheck rc;
  for (int v = 0; v < g.n(); ++v) {
    auto deg = part_degrees(g, part, alpha, v);
    int own = deg[part[v]];
    if (part[v] < alpha - 1) rc.expect(own <= 1, "early part degree > 1");
    if (part[v] == alpha - 1) {
      rc.expect(own <= 2, "last part degree > 2");
      if (own == 2)
        for (int i = 0; i < alpha; ++i)
          rc.expect(deg[i] == 2, "degree-2 vertex without exactly 2 per part");
    }
  }
  return rc;
}

RefineCheck check_odd_clauses(const Graph& g, const std::vector<int>& part,
                              int alpha) {
  RefineCheck rc;
  for (int v = 0; v < g.n(); ++v) {
    auto deg = part_degrees(g, part, alpha, v);
    int own = deg[part[v]];
    if (part[v] < alpha - 2) rc.expect(own <= 1, "early part degree > 1");
    if (part[v] >= alpha - 2) rc.expect(own <= 2, "special part degree > 2");
    if (part[v] == alpha - 2 && own == 2) {
      for (int i = 0; i < alpha - 2; ++i)
        rc.expect(deg[i] == 2, "second special: not exactly 2 in early part");
      rc.expect(deg[alpha - 1] == 3, "second special: not exactly 3 in last");
    }
    if (part[v] == alpha - 1 && own == 2) {
      for (int i = 0; i < alpha - 1; ++i)
        rc.expect(deg[i] >= 2, "last special: fewer than 2 in earlier part");
      rc.expect(deg[alpha - 2] <= 3, "last special: more than 3 in second special");
    }
  }
  return rc;
}

}  // namespace

Partition refined_partition(const Graph& g, int d) {
  require(d >= 4, ErrorKind::PreconditionViolated, "refined_partition needs d >= 4");
  require(g.max_degree() <= d, ErrorKind::PreconditionViolated,
          "max degree exceeds d");
  bool even = (d % 2 == 0);
  int alpha = even ? d / 2 : (d - 1) / 2;

  std::vector<int> part(g.n());
  for (int v = 0; v < g.n(); ++v) part[v] = v % alpha;

  auto inpart = [&](int v) {
    int c = 0;
    for (int w : g.neighbors(v))
      if (part[w] == part[v]) ++c;
    return c;
  };
  auto deg_into = [&](int v, int j) {
    int c = 0;
    for (int w : g.neighbors(v))
      if (part[w] == j) ++c;
    return c;
  };

  for (int round = 0;; ++round) {
    check_internal(round < 100, "refined_partition: restart bound exceeded");
    minimize_inpart_edges(g, part, alpha);

    // migrate degree-2 vertices into the special part(s); moves are
    // sum-preserving, so local minimality is expected to survive - if it
    // does not, the clause check fails and local search resumes.
    bool consistent = true;
    if (even) {
      for (;;) {
        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
          if (part[v] != alpha - 1 && inpart(v) == 2) {
            pick = v;
            break;
          }
        if (pick < 0) break;
        if (deg_into(pick, alpha - 1) != 2) {
          consistent = false;  // not at a local minimum after all
          break;
        }
        part[pick] = alpha - 1;
      }
    } else {
      // stage 1: early parts -> one of the two special parts
      for (consistent = true; consistent;) {
        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
          if (part[v] < alpha - 2 && inpart(v) == 2) {
            pick = v;
            break;
          }
        if (pick < 0) break;
        if (deg_into(pick, alpha - 1) == 2)
          part[pick] = alpha - 1;
        else if (deg_into(pick, alpha - 2) == 2)
          part[pick] = alpha - 2;
        else
          consistent = false;
      }
      // stage 2: second special -> last, except exactly-3-in-last vertices
      while (consistent) {
        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
          if (part[v] == alpha - 2 && inpart(v) == 2 &&
              deg_into(v, alpha - 1) != 3) {
            pick = v;
            break;
          }
        if (pick < 0) break;
        if (deg_into(pick, alpha - 1) != 2) {
          consistent = false;
          break;
        }
        part[pick] = alpha - 1;
      }
    }

    if (consistent) {
      RefineCheck rc = even ? check_even_clauses(g, part, alpha)
                            : check_odd_clauses(g, part, alpha);
      if (rc.ok) break;
    }
    // resume local search; the violation implies a strictly improving move
  }

  Partition out;
  out.parts = collect_parts(part, alpha);
  out.caps.assign(alpha, 1);
  out.caps[alpha - 1] = 2;
  if (!even) out.caps[alpha - 2] = 2;
  return out;
}

// ---------------------------------------------------------------------------
// A/B split of long paths and non-4 cycles
// ---------------------------------------------------------------------------

ABSplit split_path_cycle(const PathOrCycle& h) {
  int len = static_cast<int>(h.verts.size());
  if (h.cycle)
    require(len != 4 && len >= 3, ErrorKind::PreconditionViolated,
            "cycle split: length 4 not allowed");
  else
    require(len >= 5, ErrorKind::PreconditionViolated,
            "path split needs >= 5 vertices");

  ABSplit out;
  std::vector<char> in_b(len, 0);
  if (!h.cycle) {
    // greedy from the vertex next to an endpoint; edges (1,2), (4,5), ...
    for (int i = 1; i + 1 <= len - 2; i += 3) {
      out.b_edges.emplace_back(h.verts[i], h.verts[i + 1]);
      in_b[i] = in_b[i + 1] = 1;
    }
  } else if (len <= 5) {
    out.b_edges.emplace_back(h.verts[0], h.verts[1]);
    in_b[0] = in_b[1] = 1;
  } else {
    // m edges with gaps of 1 or 2 A-vertices; len = 3m + extra, extra gaps
    // of one more vertex assigned to the last intervals
    int m = len / 3;
    int extra = len - 3 * m;  // 0, 1 or 2 intervals get a 2-gap
    int pos = 0;
    for (int e = 0; e < m; ++e) {
      out.b_edges.emplace_back(h.verts[pos], h.verts[pos + 1]);
      in_b[pos] = in_b[pos + 1] = 1;
      int gap = 1 + (e >= m - extra ? 1 : 0);
      pos += 2 + gap;
    }
  }
  for (int i = 0; i < len; ++i)
    if (!in_b[i]) out.a.push_back(h.verts[i]);
  return out;
}

std::vector<int> select_w_even(const Graph& g, const std::vector<int>& last_part) {
  Graph h = g.induced(last_part);
  require(h.max_degree() <= 2, ErrorKind::PreconditionViolated,
          "select_w_even: part has degree > 2");

  std::vector<int> deg(h.n());
  std::vector<char> alive(h.n(), 1);
  for (int v = 0; v < h.n(); ++v) deg[v] = h.degree(v);
  std::vector<int> w_local;
  for (;;) {
    int pick = -1;
    for (int v = 0; v < h.n(); ++v)
      if (alive[v] && deg[v] == 2) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    alive[pick] = 0;
    w_local.push_back(pick);
    for (int u : h.neighbors(pick))
      if (alive[u]) --deg[u];
  }

  std::vector<int> w;
  for (int lv : w_local) w.push_back(last_part[lv]);

  check_internal(h.is_independent(w_local), "select_w_even: W not independent");
  for (int lv : w_local)
    check_internal(h.degree(lv) == 2, "select_w_even: member without 2 part-neighbors");
  std::vector<int> rest;
  for (int v = 0; v < h.n(); ++v)
    if (alive[v]) rest.push_back(v);
  check_internal(h.induced(rest).max_degree() <= 1,
                 "select_w_even: remainder degree > 1");
  return w;
}

std::vector<int> select_w_conflict_free(
    const std::vector<int>& m_verts,
    const std::vector<std::pair<int, int>>& pairs,
    const std::vector<ConflictSet>& conflicts) {
  // the pairs must perfectly match m_verts
  std::vector<int> sorted_m = m_verts;
  std::sort(sorted_m.begin(), sorted_m.end());
  std::vector<int> covered;
  for (auto [a, b] : pairs) {
    covered.push_back(a);
    covered.push_back(b);
  }
  std::sort(covered.begin(), covered.end());
  require(covered == sorted_m, ErrorKind::PreconditionViolated,
          "pairs do not perfectly match M");

  std::vector<char> seen_conflict_member;
  {
    std::vector<int> all;
    for (const auto& c : conflicts)
      for (int v : c.members) all.push_back(v);
    std::sort(all.begin(), all.end());
    require(std::adjacent_find(all.begin(), all.end()) == all.end(),
            ErrorKind::PreconditionViolated, "conflict sets overlap");
  }

  // local ids
  std::vector<int> local_of(sorted_m.empty() ? 0 : sorted_m.back() + 1, -1);
  for (std::size_t i = 0; i < sorted_m.size(); ++i) local_of[sorted_m[i]] = static_cast<int>(i);
  int nl = static_cast<int>(sorted_m.size());
  auto lid = [&](int v) {
    require(v >= 0 && v < static_cast<int>(local_of.size()) && local_of[v] >= 0,
            ErrorKind::PreconditionViolated, "conflict member outside M");
    return local_of[v];
  };

  std::vector<std::vector<int>> adj(nl);
  std::vector<std::pair<int, int>> gprime;  // local edges
  auto has_gprime = [&](int a, int b) {
    for (auto [x, y] : gprime)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };
  auto add_edge = [&](int a, int b) {
    gprime.emplace_back(a, b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (auto [a, b] : pairs) add_edge(lid(a), lid(b));

  for (const auto& c : conflicts) {
    std::vector<int> mem;
    for (int v : c.members) mem.push_back(lid(v));
    std::sort(mem.begin(), mem.end());
    if (mem.size() == 3) {
      bool added = false;
      for (std::size_t i = 0; i < 3 && !added; ++i)
        for (std::size_t j = i + 1; j < 3 && !added; ++j)
          if (!has_gprime(mem[i], mem[j])) {
            add_edge(mem[i], mem[j]);
            added = true;
          }
      check_internal(added, "conflict triple already fully connected");
    } else if (mem.size() == 4) {
      static const int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
      bool added = false;
      for (const auto& p : kPairings) {
        if (!has_gprime(mem[p[0]], mem[p[1]]) && !has_gprime(mem[p[2]], mem[p[3]])) {
          add_edge(mem[p[0]], mem[p[1]]);
          add_edge(mem[p[2]], mem[p[3]]);
          added = true;
          break;
        }
      }
      check_internal(added, "conflict 4-tuple has no disjoint non-edges");
    } else {
      fail(ErrorKind::PreconditionViolated, "conflict set must have 3 or 4 members");
    }
  }

  // G' is a union of two matchings: 2-color each component, take the side
  // holding the component's smallest vertex.
  std::vector<int> color(nl, -1);
  std::vector<char> take(nl, 0);
  for (int s = 0; s < nl; ++s) {
    if (color[s] != -1) continue;
    std::vector<int> comp;
    std::queue<int> q;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else
          check_internal(color[w] != color[v], "augmented graph has an odd cycle");
      }
    }
    // s is the component's smallest vertex; keep its color class
    for (int v : comp)
      if (color[v] == color[s]) take[v] = 1;
  }

  std::vector<int> w;
  for (int v = 0; v < nl; ++v)
    if (take[v]) w.push_back(sorted_m[v]);

  // exactly one endpoint per matching edge, <= 2 from every conflict set
  for (auto [a, b] : pairs)
    check_internal(take[lid(a)] + take[lid(b)] == 1,
                   "selection does not traverse the matching");
  for (const auto& c : conflicts) {
    int cnt = 0;
    for (int v : c.members)
      if (take[lid(v)]) ++cnt;
    check_internal(cnt <= 2, "selection meets a conflict set thrice");
  }
  return w;
}

}  // namespace udg
