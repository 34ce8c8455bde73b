#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cwft/artifacts.hpp"
#include "cwft/config.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  long seed = 0;
  bool seed_set = false;
  std::string emit;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("config", opts.config_path, "run-configuration file (JSON)")
      ->required();
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--seed", opts.seed, "seed recorded in the reports")
      ->each([&](const std::string&) { opts.seed_set = true; });
  cmd->add_option("--emit", opts.emit,
                  "comma-separated artifact list: csv,json,svg");
}

int load_and_apply(const CommonOpts& opts, cwft::RunConfig& cfg) {
  cfg = cwft::parse_config(opts.config_path);
  if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
  if (opts.seed_set) {
    cfg.seed = opts.seed;
    cfg.scenario.seed = opts.seed;
  }
  if (!opts.emit.empty()) {
    cfg.emit_csv = cfg.emit_json = cfg.emit_svg = false;
    std::size_t start = 0;
    while (start <= opts.emit.size()) {
      std::size_t comma = opts.emit.find(',', start);
      std::string tok = opts.emit.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      if (tok == "csv") cfg.emit_csv = true;
      else if (tok == "json") cfg.emit_json = true;
      else if (tok == "svg") cfg.emit_svg = true;
      else if (!tok.empty()) throw cwft::ConfigError({"--emit: unknown format \"" + tok + "\""});
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"event-driven front-tracking simulator for the congested "
               "p-system with a singular pressure law"};
  app.require_subcommand(1);

  CommonOpts run_opts, sweep_opts, validate_opts;
  CLI::App* cmd_run = app.add_subcommand("run", "single simulation");
  add_common(cmd_run, run_opts);
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "eps-sweep");
  add_common(cmd_sweep, sweep_opts);
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "check a configuration file");
  add_common(cmd_validate, validate_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      cwft::RunConfig cfg;
      load_and_apply(run_opts, cfg);
      cfg.sweep.reset();
      return cwft::execute(cfg);
    }
    if (cmd_sweep->parsed()) {
      cwft::RunConfig cfg;
      load_and_apply(sweep_opts, cfg);
      if (!cfg.sweep) {
        std::cerr << "sweep: configuration has no sweep table\n";
        return 2;
      }
      return cwft::execute(cfg);
    }
    if (cmd_validate->parsed()) {
      cwft::RunConfig cfg;
      load_and_apply(validate_opts, cfg);
      std::cout << "ok\n";
      return 0;
    }
  } catch (const cwft::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
