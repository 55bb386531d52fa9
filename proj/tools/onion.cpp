// onion: peel grids into convex layers and run the scaling experiments.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "onion/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact convex-layer peeling of integer grids and nested squares"};
  app.require_subcommand(1);

  onion::RunConfig cfg;
  std::int64_t grid_n = 0;
  int squares_k = 0;
  std::vector<std::int64_t> fit_sizes;
  std::int64_t mu = 0;
  std::string quantity;
  std::string trace_path, csv_path, svg_path;

  auto* peel = app.add_subcommand("peel", "Peel one point set and write its layers");
  auto* peel_grid = peel->add_option("--grid", grid_n, "Grid side n");
  auto* peel_squares = peel->add_option("--squares", squares_k, "Number of nested squares k");
  peel_grid->excludes(peel_squares);
  peel->add_option("--trace", trace_path, "Trace JSON output");
  peel->add_option("--csv", csv_path, "Per-layer CSV output");
  peel->add_option("--svg", svg_path, "SVG figure output");
  peel->add_flag("--count-only", cfg.count_only, "Report counts only, keep no polygons");
  peel->callback([&] {
    if (peel_grid->count() + peel_squares->count() != 1)
      throw CLI::ValidationError("peel", "exactly one of --grid or --squares is required");
  });

  auto* fit = app.add_subcommand("fit", "Fit a power law to tau(n) or max layer size over grids");
  fit->add_option("--grid", fit_sizes, "Grid sides")->required()->expected(2, 1 << 20);
  fit->add_option("--quantity", quantity, "tau or maxlayer")
      ->required()
      ->check(CLI::IsMember({"tau", "maxlayer"}));
  fit->add_option("--csv", csv_path, "Per-n CSV output");

  auto* lines = app.add_subcommand("lines", "Count lattice lines per primitive direction");
  lines->add_option("--n", cfg.lines_n, "Grid side")->required();
  lines->add_option("--mu", mu, "Direction bound")->required();

  auto* tot = app.add_subcommand("totient", "Sum of totients up to mu and its density");
  tot->add_option("--mu", mu, "Upper limit")->required();

  auto* act = app.add_subcommand("activity", "Track active directions while peeling a grid");
  act->add_option("--grid", grid_n, "Grid side n")->required();
  act->add_option("--mu", mu, "Direction bound")->required();
  act->add_option("--csv", csv_path, "Per-layer, per-direction CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return onion::kExitUsage;
  }

  if (peel->parsed()) {
    cfg.command = onion::Command::Peel;
    if (peel_grid->count()) cfg.source = onion::GridSpec{grid_n};
    else cfg.source = onion::SquaresSpec{squares_k};
  } else if (fit->parsed()) {
    cfg.command = onion::Command::Fit;
    cfg.fit_sizes = fit_sizes;
    cfg.quantity = quantity == "tau" ? onion::FitQuantity::Tau : onion::FitQuantity::MaxLayer;
  } else if (lines->parsed()) {
    cfg.command = onion::Command::Lines;
    cfg.mu = mu;
  } else if (tot->parsed()) {
    cfg.command = onion::Command::Totient;
    cfg.mu = mu;
  } else if (act->parsed()) {
    cfg.command = onion::Command::Activity;
    cfg.source = onion::GridSpec{grid_n};
    cfg.mu = mu;
  }
  if (!trace_path.empty()) cfg.trace_path = trace_path;
  if (!csv_path.empty()) cfg.csv_path = csv_path;
  if (!svg_path.empty()) cfg.svg_path = svg_path;

  return onion::run(cfg, std::cout, std::cerr);
}
