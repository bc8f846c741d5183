#include "opo_cli/commands.hpp"

#include <opo/errors.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Below-threshold type-II OPO statistics: far field, EPR variances, Stokes correlations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> overrides;
  std::string output;
  int threads = -1;
  app.add_option("-c,--config", config_path, "key = value configuration file");
  app.add_option("-s,--set", overrides, "override one setting, e.g. -s rho2=0.5");
  app.add_option("-o,--output", output, "output path (default: stdout)");
  app.add_option("-j,--threads", threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

  const char* help[] = {"far-field intensity map over (kx, ky)",
                        "print crossing point, external point and its Hopf frequency",
                        "EPR variance map over (psi_sum, omega)",
                        "EPR variance along omega at one psi_sum",
                        "Stokes means or polarization degree map (quantity = s0|s1|p2)",
                        "normal-ordered Stokes variances map (quantity = g1|g23|d1|d23)",
                        "run identity, oracle and Stokes checks"};
  int i = 0;
  for (auto name : opo::cli::subcommands) app.add_subcommand(std::string(name), help[i++]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : opo::cli::exit_config;
  }

  opo::cli::RunConfig cfg;
  try {
    if (!output.empty()) overrides.push_back("output=" + output);
    if (threads >= 0) overrides.push_back("threads=" + std::to_string(threads));
    cfg = opo::cli::load_config(config_path, overrides);
  } catch (const opo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return opo::cli::exit_config;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  return opo::cli::run_subcommand(cfg, cmd, std::cout, std::cerr);
}
