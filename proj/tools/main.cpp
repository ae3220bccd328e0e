#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv) {
  using namespace mevac::cli;

  CLI::App app{"mevac: momentum of a moving magnetoelectric medium"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "csv";
  std::optional<double> beta;
  std::optional<double> cutoff;
  unsigned workers = 1;

  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--beta", beta, "override boost.beta");
  app.add_option("--cutoff", cutoff, "override vacuum.cutoff [rad/cm]");
  app.add_option("--workers", workers, "threads for vacuum mode sums (0 = all cores)");

  const char* commands[][2] = {
      {"transform", "boosted permittivity and permeability"},
      {"expand-check", "first-order expansion against the exact reference model"},
      {"velocity", "medium velocity with per-term attribution"},
      {"vacuum-sweep", "zero-point bilinears over a cutoff or grid_n sweep"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "JSON config file")->required();
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  Options opts;
  opts.format = format == "json" ? Format::json : Format::csv;
  opts.workers = workers;

  RunConfig cfg;
  try {
    cfg = load_config(config_path);
    apply_overrides(cfg, beta, cutoff);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return run_command(app.get_subcommands().front()->get_name(), cfg, opts, std::cout, std::cerr);
}
