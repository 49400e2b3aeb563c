// Command-line surface: embed / verify / ramsey / bound.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "udg/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"unit-distance graph embedding engine"};
  app.require_subcommand(1);

  udg::RunConfig cfg;
  std::string mode = "euclid";

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("input", cfg.input_path, "input file")->required();
    sub->add_option("--output", cfg.output_path, "write the result here");
    sub->add_option("--mode", mode, "euclid|sphere")
        ->check(CLI::IsMember({"euclid", "sphere"}));
    sub->add_option("--seed", cfg.seed, "rng seed (default 0x5EED0001)");
    sub->add_option("--eps-edge", cfg.tol.eps_edge, "edge tolerance");
    sub->add_option("--eps-gp", cfg.tol.eps_gp, "general-position tolerance");
    sub->add_option("--max-retries", cfg.max_retries, "construction redraw cap");
  };

  CLI::App* embed = app.add_subcommand("embed", "construct unit coordinates");
  add_common(embed, true);
  embed->add_option("--dim", cfg.dim, "target dimension")->required();
  embed->add_option("--strategy", cfg.strategy,
                    "auto|max-degree|sphere-max-degree|degenerate|edge-bounded")
      ->check(CLI::IsMember({"auto", "max-degree", "sphere-max-degree",
                             "degenerate", "edge-bounded"}));

  CLI::App* verify = app.add_subcommand("verify", "check coordinates");
  add_common(verify, true);
  verify->add_option("coords", cfg.coords_path, "embedding document")->required();

  CLI::App* ramsey = app.add_subcommand("ramsey", "embed one color class");
  ramsey->add_option("input", cfg.input_path, "coloring file");
  add_common(ramsey, false);
  ramsey->add_option("--exhaustive", cfg.exhaustive_s,
                     "run all colorings of K_s");
  ramsey->add_option("--threads", cfg.threads, "worker threads (0 = auto)");

  CLI::App* bound = app.add_subcommand("bound", "report applicable theorems");
  add_common(bound, true);

  CLI11_PARSE(app, argc, argv);
  cfg.mode = (mode == "sphere") ? udg::EmbedMode::Sphere : udg::EmbedMode::Euclid;

  if (embed->parsed()) return udg::cmd_embed(cfg, std::cout, std::cerr);
  if (verify->parsed()) return udg::cmd_verify(cfg, std::cout, std::cerr);
  if (ramsey->parsed()) {
    if (cfg.exhaustive_s == 0 && cfg.input_path.empty()) {
      std::cerr << "ramsey needs a coloring file or --exhaustive\n";
      return 1;
    }
    return udg::cmd_ramsey(cfg, std::cout, std::cerr);
  }
  return udg::cmd_bound(cfg, std::cout, std::cerr);
}
