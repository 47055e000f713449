#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Chern-Simons-Schrodinger wave-guide laboratory"};
  app.require_subcommand(1, 1);
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  for (const char* name : {"run2d", "run1d", "reduce", "groundstate", "selfcheck"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "seed for random test fields");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : csswg::cli::kValidation;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  CLI::App* sub = app.get_subcommand(command);
  try {
    csswg::cli::RunConfig cfg;
    if (!config_path.empty()) {
      cfg = csswg::cli::load_config(config_path);
    } else if (command != "selfcheck") {
      throw csswg::ConfigurationError("--config is required for " + command);
    }
    if (sub->count("--out")) cfg.out = out_dir;
    if (sub->count("--seed")) cfg.seed = seed;
    return csswg::cli::run_command(command, cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << command << ": " << e.what() << '\n';
    return csswg::cli::exit_code_for(e);
  }
}
