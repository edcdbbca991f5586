#include "cramsim/manifest.hpp"

#include <cstdio>
#include <fstream>

#include "cramsim/errors.hpp"
#include "cramsim/version.hpp"

namespace cramsim {

uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw numeric_error("checksum: cannot open " + path);
  uint64_t h = 14695981039346656037ull;
  char buf[1 << 14];
  while (in) {
    in.read(buf, sizeof(buf));
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::string fnv1a_hex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_manifest(const std::string& out_dir, const RunConfig& cfg,
                    const std::string& command, double wall_clock_s,
                    const std::map<std::string, std::string>& checksums) {
  nlohmann::json meta{
      {"tool", "cramsim"},
      {"version", kVersion},
      {"command", command},
      {"wall_clock_s", wall_clock_s},
      {"checksums", checksums},
      {"decisions",
       {
           {"integrator", "stochastic_heun"},
           {"llg_prefactor", "(1+alpha^2)/gamma"},
           {"thermal_noise", "isotropic_3vector_tesla"},
           {"noise_mode", cfg.device.noise_mode == NoiseMode::pinned ? "pinned" : "computed"},
           {"initial_angle", "inverse_cdf_table_8192"},
           {"switch_threshold_mz", -0.5},
           {"mid_switch_resistance", "cosine_conductance"},
           {"polarity", "positive_reduces_pma_and_switches_P_to_AP"},
           {"stt_polarization", "temperature_corrected_p0"},
           {"tmr_sweep_polarization", "kept_at_p0_derived_value"},
           {"isotonic", "pool_adjacent_violators"},
           {"wilson_z", 1.959963984540054},
           {"optimizer", "scan_201_then_golden_section"},
           {"error_weights", "uniform_over_combinations"},
           {"energy", "logic_line_only_mean_combinations"},
           {"sweep_substream", "splitmix64_over_cell_index"},
           {"trial_substream", "(v_index<<32)|trial"},
       }},
  };
  nlohmann::json doc{{"config", config_to_json(cfg)}, {"meta", meta}};

  std::ofstream out(out_dir + "/manifest.json", std::ios::binary);
  if (!out) throw numeric_error("cannot write manifest in " + out_dir);
  out << doc.dump(2) << "\n";
}

}  // namespace cramsim
