#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cramsim/commands.hpp"
#include "cramsim/errors.hpp"
#include "cramsim/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Macrospin STT+VCMA switching statistics and CRAM gate analysis"};
  app.set_version_flag("--version", cramsim::kVersion);
  app.require_subcommand(1);

  cramsim::CliOverrides ov;
  std::string command;

  const struct {
    const char* name;
    const char* desc;
  } kCommands[] = {
      {"calibrate", "derive zero-bias anisotropy and print the stability table"},
      {"trajectory", "record one pulse simulation as trajectory.csv"},
      {"sptc", "Monte Carlo switching-probability transfer curve"},
      {"gate", "logic-gate expectations, optimal voltage, energy"},
      {"sweep", "TMR x VCMA sweep of error rate and energy"},
  };
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.desc);
    sub->add_option("--config", ov.config_path, "config file (key=value sections or JSON)");
    sub->add_option("--out", ov.out_dir, "output directory");
    sub->add_option("--seed", ov.seed, "random seed (overrides config)");
    sub->add_option("--trials", ov.trials, "Monte Carlo trials per grid point");
    sub->add_option("--xi", ov.xi, "VCMA coefficient [J/(V*m)]");
    sub->add_option("--tmr", ov.tmr, "zero-bias TMR ratio override");
    sub->callback([&command, name = std::string(c.name)] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a configuration error
  }

  try {
    return cramsim::run_command(command, ov);
  } catch (const cramsim::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
