#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace saa::cli;
  CLI::App app{"Simultaneous ascending auction experiments"};
  app.require_subcommand(1);
  CommonOptions opt;

  const auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON experiment config");
    sub->add_option("--seed", opt.seed, "Master seed (overrides the config)");
    sub->add_option("--workers", opt.workers, "Worker threads (default 1)")->check(CLI::PositiveNumber);
    sub->add_option("--out", opt.out, "Output directory");
  };
  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const CommonOptions&);
  };
  const Entry entries[] = {
      {"derive-sc", "Derive a self-confirming (or all-SB) price distribution", cmd_derive_sc},
      {"simulate-profile", "Estimate payoffs for strategy profiles", cmd_simulate_profile},
      {"analyze-game", "Equilibrium analysis of estimated payoff tables", cmd_analyze_game},
      {"verify", "Recompute the checksums listed in a run manifest", cmd_verify},
      {"describe-dist", "Print per-good mean and standard deviation of a distribution", cmd_describe_dist},
  };
  int (*chosen)(const CommonOptions&) = nullptr;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    if (e.fn == cmd_verify || e.fn == cmd_describe_dist) sub->add_option("input", opt.input, "Path");
    sub->callback([&chosen, fn = e.fn] { chosen = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  return run_guarded(chosen, opt);
}
