#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cramsim/device.hpp"
#include "cramsim/llg.hpp"

#include "json.hpp"

namespace cramsim {

struct CampaignConfig {
  double v_min = 0.0;
  double v_max = 1.5;
  int v_points = 41;
  int trials = 2000;
  uint64_t seed = 0;
  bool seed_set = false;  // seed is mandatory; tracked explicitly
  int parallelism = 0;    // 0 = available executors
  std::vector<double> delta_ladder;
};

struct GateConfig {
  std::string name = "nand";
};

struct SweepConfig {
  std::vector<double> tmr_grid{1.0, 1.5, 2.0, 2.5, 3.0};
  std::vector<double> xi_values{0.0, 200e-15};
};

struct OutputConfig {
  std::string dir;
};

// Full run configuration. Device keys mirror the material-parameter table
// symbols (lowercase, underscores); all values SI.
struct RunConfig {
  DeviceParams device;
  PulseSpec pulse;
  CampaignConfig campaign;
  GateConfig gate;
  SweepConfig sweep;
  OutputConfig output;

  std::vector<double> campaign_grid() const;
  void validate() const;  // throws config_error with key-path messages
};

// Parses key=value sections or JSON (detected by a leading '{').
// A manifest document ({"config": {...}, "meta": {...}}) is accepted as
// config; its meta block is ignored. Unknown keys are rejected.
RunConfig parse_config_text(const std::string& text, const std::string& origin);
RunConfig load_config_file(const std::string& path);

// Fully materialized config (every default resolved) as JSON.
nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j, const std::string& origin);

}  // namespace cramsim
