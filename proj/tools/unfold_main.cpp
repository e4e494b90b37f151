#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "unfold/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"unfold - vertex-unfoldings of triangulated surfaces"};

  unfold::RunConfig cfg;
  std::map<std::string, unfold::RunMode> modes{
      {"path", unfold::RunMode::path},
      {"cycle", unfold::RunMode::cycle},
      {"verify", unfold::RunMode::verify},
      {"experiment", unfold::RunMode::experiment},
  };
  app.add_option("--mode", cfg.mode, "path | cycle | verify | experiment")
      ->required()
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--in", cfg.input, "input mesh (.off/.obj) or result JSON (verify mode)");
  app.add_option("--out-svg", cfg.out_svg, "write the layout as SVG");
  app.add_option("--out-json", cfg.out_json, "write the full result document as JSON");
  app.add_option("--n", cfg.instances, "experiment: number of random instances")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "experiment: base seed");
  app.add_option("--stroke", cfg.svg_stroke, "SVG stroke width (default: auto)");

  CLI11_PARSE(app, argc, argv);
  return unfold::run(cfg, std::cout, std::cerr);
}
