#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "udg/embedding.hpp"
#include "udg/euclid_embed.hpp"
#include "udg/graph.hpp"
#include "udg/ramsey.hpp"
#include "udg/verify.hpp"

namespace udg {

struct RunConfig {
  std::string input_path;
  std::string coords_path;  // cmd_verify's second input
  std::string output_path;  // empty = stdout
  int dim = -1;
  EmbedMode mode = EmbedMode::Euclid;
  std::string strategy = "auto";
  std::uint64_t seed = 0x5EED0001ull;
  Tolerances tol;
  int max_retries = 64;
  int exhaustive_s = 0;  // cmd_ramsey: run all colorings of K_s
  int threads = 0;       // 0 = hardware concurrency
};

// Graph file: "n m" then m lines "u v"; '#' starts a comment.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// Coloring file: "s" then C(s,2) lines "u v c" with c in {r, b}.
Coloring parse_coloring(std::istream& in);
Coloring read_coloring_file(const std::string& path);

// 17-significant-digit decimal (round-trips doubles exactly)
std::string fmt_g17(double x);

// Embedding document: stable field order, one "vertex" row per vertex.
std::string format_embedding_doc(const Graph& g, const Embedding& emb,
                                 const std::string& strategy, EmbedMode mode,
                                 std::uint64_t seed, const Tolerances& tol);

// Reads dim/n/vertex rows back from an embedding document.
Embedding parse_embedding_doc(std::istream& in);

// Exit codes: 0 verified success, 1 I/O or internal error, 2 input outside
// every implemented theorem's hypothesis.
int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ramsey(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace udg
