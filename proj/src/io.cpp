#include "udg/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "udg/error.hpp"
#include "udg/sphere_embed.hpp"

namespace udg {

namespace {

// strips '#' comments, returns whitespace tokens
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) toks.push_back(t);
  }
  return toks;
}

long long to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    require(used == s.size(), ErrorKind::ParseError, std::string(what) + ": " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(ErrorKind::ParseError, std::string("bad ") + what + ": " + s);
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  auto toks = tokenize(in);
  require(toks.size() >= 2, ErrorKind::ParseError, "graph header missing");
  long long n = to_int(toks[0], "vertex count");
  long long m = to_int(toks[1], "edge count");
  require(n >= 0 && m >= 0, ErrorKind::ParseError, "negative header");
  require(static_cast<long long>(toks.size()) == 2 + 2 * m,
          ErrorKind::ParseError, "edge list length mismatch");
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    long long u = to_int(toks[2 + 2 * e], "edge endpoint");
    long long v = to_int(toks[3 + 2 * e], "edge endpoint");
    require(u >= 0 && v >= 0 && u < n && v < n && u != v, ErrorKind::ParseError,
            "bad edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::ParseError, "cannot open " + path);
  return parse_graph(in);
}

Coloring parse_coloring(std::istream& in) {
  auto toks = tokenize(in);
  require(!toks.empty(), ErrorKind::ParseError, "coloring header missing");
  long long s = to_int(toks[0], "vertex count");
  require(s >= 1, ErrorKind::ParseError, "coloring needs s >= 1");
  long long pairs = s * (s - 1) / 2;
  require(static_cast<long long>(toks.size()) == 1 + 3 * pairs,
          ErrorKind::ParseError,
          "coloring must list all " + std::to_string(pairs) + " pairs");
  Coloring col(static_cast<int>(s));
  std::vector<char> seen(pairs, 0);
  std::size_t t = 1;
  for (long long e = 0; e < pairs; ++e) {
    long long u = to_int(toks[t++], "pair endpoint");
    long long v = to_int(toks[t++], "pair endpoint");
    const std::string& c = toks[t++];
    require(u >= 0 && v >= 0 && u < s && v < s && u != v, ErrorKind::ParseError,
            "bad pair");
    require(c == "r" || c == "b", ErrorKind::ParseError,
            "color must be r or b, got " + c);
    long long a = std::min(u, v), bb = std::max(u, v);
    long long idx = (2 * s - 1 - a) * a / 2 + (bb - a - 1);
    require(!seen[idx], ErrorKind::ParseError, "duplicate pair");
    seen[idx] = 1;
    col.set(static_cast<int>(u), static_cast<int>(v),
            c == "r" ? EdgeColor::Red : EdgeColor::Blue);
  }
  return col;
}

Coloring read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::ParseError, "cannot open " + path);
  return parse_coloring(in);
}

std::string fmt_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_embedding_doc(const Graph& g, const Embedding& emb,
                                 const std::string& strategy, EmbedMode mode,
                                 std::uint64_t seed, const Tolerances& tol) {
  std::ostringstream out;
  out << "dim " << emb.dim << "\n";
  out << "seed " << seed << "\n";
  out << "strategy " << strategy << "\n";
  out << "mode " << (mode == EmbedMode::Sphere ? "sphere" : "euclid") << "\n";
  out << "n " << g.n() << "\n";
  out << "m " << g.m() << "\n";
  for (int v = 0; v < g.n(); ++v) {
    out << "vertex " << v;
    for (double c : emb.pos[v]) out << " " << fmt_g17(c);
    out << "\n";
  }
  VerifyReport er = verify_edges(g, emb, tol);
  out << "edge_max_deviation " << fmt_g17(er.max_edge_deviation) << "\n";
  if (er.worst_edge.first >= 0)
    out << "worst_edge " << er.worst_edge.first << " " << er.worst_edge.second
        << "\n";
  out << "min_vertex_gap " << fmt_g17(er.distinct_min_gap) << "\n";
  bool pass = er.pass;
  if (mode == EmbedMode::Sphere) {
    VerifyReport sr = verify_sphere(emb, kSphereRadius, tol);
    out << "sphere_max_deviation " << fmt_g17(sr.sphere_deviation) << "\n";
    pass = pass && sr.pass;
  }
  out << "verify_pass " << (pass ? 1 : 0) << "\n";
  return out.str();
}

Embedding parse_embedding_doc(std::istream& in) {
  int dim = -1, n = -1;
  Embedding emb;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "dim") {
      ls >> dim;
    } else if (key == "n") {
      ls >> n;
      require(dim >= 1 && n >= 0, ErrorKind::ParseError, "dim before n required");
      emb = Embedding(dim, n);
    } else if (key == "vertex") {
      int v = -1;
      ls >> v;
      require(n >= 0 && v >= 0 && v < n, ErrorKind::ParseError,
              "vertex row out of range");
      Vec p(dim);
      for (int k = 0; k < dim; ++k)
        require(static_cast<bool>(ls >> p[k]), ErrorKind::ParseError,
                "short coordinate row");
      emb.pos[v] = std::move(p);
    }
  }
  require(dim >= 1 && n >= 0, ErrorKind::ParseError, "no embedding found");
  return emb;
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

namespace {

bool hypothesis_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::PreconditionViolated:
    case ErrorKind::K33Excluded:
    case ErrorKind::NotDegenerate:
    case ErrorKind::TooManyEdges:
    case ErrorKind::ForbiddenSubgraphForSphere:
      return true;
    default:
      return false;
  }
}

std::optional<Embedding> try_strategy(const std::string& name, const Graph& g,
                                      const RunConfig& cfg, std::string* why) {
  Rng rng(cfg.seed);
  try {
    if (name == "max-degree") {
      if (cfg.mode == EmbedMode::Sphere) {
        *why = "max-degree: output is not spherical";
        return std::nullopt;
      }
      return embed_max_degree(g, cfg.dim, rng, cfg.max_retries);
    }
    if (name == "sphere-max-degree")
      return embed_max_degree_sphere(g, cfg.dim, rng);
    if (name == "degenerate") return embed_degenerate_sphere(g, cfg.dim, rng);
    if (name == "edge-bounded")
      return embed_edge_bounded(g, cfg.dim, cfg.mode, rng);
    fail(ErrorKind::ParseError, "unknown strategy " + name);
  } catch (const Error& e) {
    if (!hypothesis_error(e.kind)) throw;
    *why = e.what();
    return std::nullopt;
  }
  return std::nullopt;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& doc) {
  if (cfg.output_path.empty()) {
    out << doc;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  require(f.good(), ErrorKind::ParseError, "cannot write " + cfg.output_path);
  f << doc;
}

}  // namespace

int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    require(cfg.dim >= 1, ErrorKind::ParseError, "embed requires --dim");
    Graph g = read_graph_file(cfg.input_path);

    std::vector<std::string> order;
    if (cfg.strategy == "auto") {
      if (cfg.mode == EmbedMode::Euclid)
        order = {"max-degree", "sphere-max-degree", "degenerate", "edge-bounded"};
      else
        order = {"sphere-max-degree", "degenerate", "edge-bounded"};
    } else {
      order = {cfg.strategy};
    }

    std::vector<std::string> reasons;
    for (const auto& name : order) {
      std::string why;
      auto emb = try_strategy(name, g, cfg, &why);
      if (!emb) {
        reasons.push_back(name + ": " + why);
        continue;
      }
      emb->seed = cfg.seed;
      std::string doc =
          format_embedding_doc(g, *emb, name, cfg.mode, cfg.seed, cfg.tol);
      emit(cfg, out, doc);
      VerifyReport er = verify_edges(g, *emb, cfg.tol);
      bool pass = er.pass;
      if (cfg.mode == EmbedMode::Sphere)
        pass = pass && verify_sphere(*emb, kSphereRadius, cfg.tol).pass;
      if (!pass) {
        err << "verification failed after construction\n";
        return 1;
      }
      return 0;
    }
    err << "NoApplicableTheorem: no implemented construction covers this input\n";
    for (const auto& r : reasons) err << "  " << r << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Graph g = read_graph_file(cfg.input_path);
    std::ifstream cf(cfg.coords_path);
    require(cf.good(), ErrorKind::ParseError, "cannot open " + cfg.coords_path);
    Embedding emb = parse_embedding_doc(cf);
    require(emb.n() == g.n(), ErrorKind::ParseError,
            "coordinate count does not match the graph");

    VerifyReport er = verify_edges(g, emb, cfg.tol);
    out << "edge_max_deviation " << fmt_g17(er.max_edge_deviation) << "\n";
    if (er.worst_edge.first >= 0)
      out << "worst_edge " << er.worst_edge.first << " " << er.worst_edge.second
          << "\n";
    out << "min_vertex_gap " << fmt_g17(er.distinct_min_gap) << "\n";
    bool pass = er.pass;
    if (cfg.mode == EmbedMode::Sphere) {
      VerifyReport sr = verify_sphere(emb, kSphereRadius, cfg.tol);
      out << "sphere_max_deviation " << fmt_g17(sr.sphere_deviation) << "\n";
      pass = pass && sr.pass;
    }
    out << "verify_pass " << (pass ? 1 : 0) << "\n";
    return pass ? 0 : 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_ramsey(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    bool spherical = cfg.mode == EmbedMode::Sphere;

    if (cfg.exhaustive_s > 0) {
      int s = cfg.exhaustive_s;
      int pair_count = Coloring::pair_count(s);
      require(pair_count <= 40, ErrorKind::PreconditionViolated,
              "exhaustive enumeration capped at C(s,2) <= 40");
      std::uint64_t total = 1ull << pair_count;

      unsigned T = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
      std::vector<char> okv(total, 0);
      auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          Rng rng(mix64(cfg.seed ^ mix64(i + 1)));
          try {
            Coloring col = Coloring::from_mask(s, i);
            RamseyResult r =
                spherical ? ramsey_spherical(col, rng) : ramsey_euclidean(col, rng);
            Graph cls = col.class_graph(r.chosen);
            bool pass = verify_edges(cls, r.emb, cfg.tol).pass;
            if (spherical)
              pass = pass && verify_sphere(r.emb, kSphereRadius, cfg.tol).pass;
            okv[i] = pass ? 1 : 0;
          } catch (...) {
            okv[i] = 0;
          }
        }
      };
      std::vector<std::thread> pool;
      std::uint64_t chunk = (total + T - 1) / T;
      for (unsigned t = 0; t < T; ++t) {
        std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(worker, lo, hi);
      }
      for (auto& th : pool) th.join();

      std::uint64_t passed = 0, first_fail = total;
      for (std::uint64_t i = 0; i < total; ++i) {
        if (okv[i])
          ++passed;
        else if (first_fail == total)
          first_fail = i;
      }
      out << "exhaustive s " << s << "\n";
      out << "variant " << (spherical ? "spherical" : "euclidean") << "\n";
      out << "dim " << (spherical ? ramsey_spherical_dim(s) : ramsey_euclidean_dim(s))
          << "\n";
      out << "total " << total << "\n";
      out << "pass " << passed << "\n";
      out << "fail " << (total - passed) << "\n";
      if (passed != total) {
        out << "first_fail_mask " << first_fail << "\n";
        return 1;
      }
      return 0;
    }

    Coloring col = read_coloring_file(cfg.input_path);
    Rng rng(cfg.seed);
    RamseyResult r =
        spherical ? ramsey_spherical(col, rng) : ramsey_euclidean(col, rng);
    Graph cls = col.class_graph(r.chosen);

    std::ostringstream doc;
    doc << "s " << col.s() << "\n";
    doc << "variant " << (spherical ? "spherical" : "euclidean") << "\n";
    doc << "chosen " << (r.chosen == EdgeColor::Red ? "red" : "blue") << "\n";
    doc << format_embedding_doc(cls, r.emb, "ramsey", cfg.mode, cfg.seed,
                                cfg.tol);
    emit(cfg, out, doc.str());

    bool pass = verify_edges(cls, r.emb, cfg.tol).pass;
    if (spherical)
      pass = pass && verify_sphere(r.emb, kSphereRadius, cfg.tol).pass;
    return pass ? 0 : 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Graph g = read_graph_file(cfg.input_path);
    int delta = g.max_degree();
    out << "n " << g.n() << "\n";
    out << "m " << g.m() << "\n";
    out << "max_degree " << delta << "\n";

    // max-degree bound, except the d=3 K_{3,3} exclusion
    if (delta == 3 && find_forbidden(g, 3).k33_component)
      out << "max-degree-bound not-applicable (K_{3,3} component at max degree 3)\n";
    else
      out << "max-degree-bound dim <= " << std::max(delta, 1) << "\n";

    // spherical max-degree bound
    out << "sphere-max-degree-bound dim_s <= " << std::max(delta + 1, 2) << "\n";

    // degeneracy bound: (d-2)-degenerate graphs fit the (d-1)-sphere
    int degeneracy = 0;
    while (!peel_min_degree(g, degeneracy).core.empty()) ++degeneracy;
    out << "degeneracy-bound degeneracy " << degeneracy << " dim_s <= "
        << std::max(degeneracy + 2, 2) << "\n";

    // edge-count bound: smallest d with m <= g(d)
    int d16 = 2;
    while (g.m() > edge_bound_g(d16)) ++d16;
    if (d16 > 2)
      out << "edge-count-bound edges " << g.m() << " > g(" << (d16 - 1) << ") = "
          << edge_bound_g(d16 - 1) << "; " << g.m() << " <= g(" << d16 << ") = "
          << edge_bound_g(d16) << " dim <= " << d16 << "\n";
    else
      out << "edge-count-bound edges " << g.m() << " <= g(2) = 3 dim <= 2\n";
    FindingSet ff = find_forbidden(g, d16);
    if (!ff.decided)
      out << "edge-count-bound-sphere undecided (search capped)\n";
    else if (ff.clique)
      out << "edge-count-bound-sphere not-applicable (contains K_{d+1})\n";
    else if (ff.kd2_minus_k3)
      out << "edge-count-bound-sphere not-applicable (contains K_{d+2}-K_3)\n";
    else
      out << "edge-count-bound-sphere dim_s <= " << d16 << "\n";
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace udg
