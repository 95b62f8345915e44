// wildroute: fire-aware escape route planning from the command line.
//
//   wildroute plan         --config C --out-dir D
//   wildroute simulate     --config C --out-dir D [--frames]
//   wildroute compare      --config C --out-dir D
//   wildroute validate-map --map M
//
// Exit codes: 0 ok, 1 config error, 2 I/O error, 3 scenario error.

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace wildroute::cli;

  CLI::App app{"Wildfire escape route planner"};
  app.require_subcommand(1);

  CommonOptions opts;
  unsigned long long seed = 0;
  std::string style;
  bool frames = false;
  std::filesystem::path map;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config, "Scenario JSON")->required();
    sub->add_option("--out-dir", opts.out_dir, "Output directory")->required();
    sub->add_option("--seed", seed, "Override sim.seed");
    sub->add_option("--style", style, "Render style")->check(CLI::IsMember({"paper", "default"}));
  };

  CLI::App* plan = app.add_subcommand("plan", "Static plan and one frame");
  add_common(plan);
  CLI::App* simulate = app.add_subcommand("simulate", "Dynamic escape simulation");
  add_common(simulate);
  simulate->add_flag("--frames", frames, "Write frame_%04d.ppm per tick");
  CLI::App* compare = app.add_subcommand("compare", "Static vs dynamic side-by-side report");
  add_common(compare);
  CLI::App* validate = app.add_subcommand("validate-map", "Class histogram and connectivity");
  validate->add_option("--map", map, "Road raster (PPM)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  for (CLI::App* sub : {plan, simulate, compare}) {
    if (!sub->parsed()) continue;
    if (sub->count("--seed")) opts.seed = seed;
    if (sub->count("--style")) opts.style = style;
  }

  try {
    if (plan->parsed()) return cmd_plan(opts);
    if (simulate->parsed()) return cmd_simulate(opts, frames);
    if (compare->parsed()) return cmd_compare(opts);
    if (validate->parsed()) return cmd_validate_map(map);
  } catch (...) {
    return report_current_exception();
  }
  return kConfigError;
}
