#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cramsim {

// Command-line overrides; each takes precedence over the config file value.
struct CliOverrides {
  std::optional<std::string> config_path;
  std::optional<std::string> out_dir;
  std::optional<uint64_t> seed;
  std::optional<int> trials;
  std::optional<double> xi;
  std::optional<double> tmr;
};

// Executes one of: calibrate, trajectory, sptc, gate, sweep.
// Returns 0 on success; throws config_error (exit 2) or numeric_error (exit 3).
int run_command(const std::string& command, const CliOverrides& overrides);

}  // namespace cramsim
