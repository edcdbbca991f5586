#include "cramsim/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cramsim/errors.hpp"
#include "cramsim/gate.hpp"

namespace cramsim {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || v.empty())
    throw config_error(key + ": not a number: '" + value + "'");
  return x;
}

long parse_long(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (end != v.c_str() + v.size() || v.empty())
    throw config_error(key + ": not an integer: '" + value + "'");
  return x;
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
  if (end != v.c_str() + v.size() || v.empty() || v[0] == '-')
    throw config_error(key + ": not an unsigned integer: '" + value + "'");
  return static_cast<uint64_t>(x);
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw config_error(key + ": empty list");
  return out;
}

// Applies one section.key = string value. Throws on unknown keys.
void apply_kv(RunConfig& cfg, const std::string& section, const std::string& key,
              const std::string& value) {
  const std::string path = section + "." + key;
  auto& d = cfg.device;
  if (section == "device") {
    if (key == "l_x") d.lx = parse_double(path, value);
    else if (key == "l_y") d.ly = parse_double(path, value);
    else if (key == "t_f") d.t_f = parse_double(path, value);
    else if (key == "t_ox") d.t_ox = parse_double(path, value);
    else if (key == "t_c") d.t_c = parse_double(path, value);
    else if (key == "ra_p") d.ra_p = parse_double(path, value);
    else if (key == "m_s0") d.ms0 = parse_double(path, value);
    else if (key == "p_0") d.p0 = parse_double(path, value);
    else if (key == "alpha") d.alpha = parse_double(path, value);
    else if (key == "xi") d.xi = parse_double(path, value);
    else if (key == "tsf") d.tsf_target = parse_double(path, value);
    else if (key == "alpha_sp") d.alpha_sp = parse_double(path, value);
    else if (key == "v_0") d.v0 = parse_double(path, value);
    else if (key == "h_ext_x") d.h_ext.x = parse_double(path, value);
    else if (key == "h_ext_y") d.h_ext.y = parse_double(path, value);
    else if (key == "h_ext_z") d.h_ext.z = parse_double(path, value);
    else if (key == "t") d.temperature = parse_double(path, value);
    else if (key == "tmr_override") d.tmr_override = parse_double(path, value);
    else if (key == "noise_mode") {
      const std::string v = trim(value);
      if (v == "pinned") d.noise_mode = NoiseMode::pinned;
      else if (v == "computed") d.noise_mode = NoiseMode::computed;
      else throw config_error(path + ": expected 'pinned' or 'computed'");
    } else if (key == "sigma_pinned_t") d.sigma_pinned_t = parse_double(path, value);
    else throw config_error("unknown key: " + path);
  } else if (section == "pulse") {
    if (key == "amplitude") cfg.pulse.amplitude = parse_double(path, value);
    else if (key == "duration") cfg.pulse.duration = parse_double(path, value);
    else if (key == "dt") cfg.pulse.dt = parse_double(path, value);
    else if (key == "relax_time") cfg.pulse.relax_time = parse_double(path, value);
    else throw config_error("unknown key: " + path);
  } else if (section == "campaign") {
    if (key == "v_min") cfg.campaign.v_min = parse_double(path, value);
    else if (key == "v_max") cfg.campaign.v_max = parse_double(path, value);
    else if (key == "v_points") cfg.campaign.v_points = static_cast<int>(parse_long(path, value));
    else if (key == "trials") cfg.campaign.trials = static_cast<int>(parse_long(path, value));
    else if (key == "seed") {
      cfg.campaign.seed = parse_u64(path, value);
      cfg.campaign.seed_set = true;
    } else if (key == "parallelism")
      cfg.campaign.parallelism = static_cast<int>(parse_long(path, value));
    else if (key == "delta_ladder") cfg.campaign.delta_ladder = parse_list(path, value);
    else throw config_error("unknown key: " + path);
  } else if (section == "gate") {
    if (key == "name") cfg.gate.name = trim(value);
    else throw config_error("unknown key: " + path);
  } else if (section == "sweep") {
    if (key == "tmr_grid") cfg.sweep.tmr_grid = parse_list(path, value);
    else if (key == "xi_values") cfg.sweep.xi_values = parse_list(path, value);
    else throw config_error("unknown key: " + path);
  } else if (section == "output") {
    if (key == "dir") cfg.output.dir = trim(value);
    else throw config_error("unknown key: " + path);
  } else {
    throw config_error("unknown section: [" + section + "]");
  }
}

RunConfig parse_ini(const std::string& text, const std::string& origin) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw config_error(origin + ":" + std::to_string(lineno) + ": malformed section header");
      section = trim(s.substr(1, s.size() - 2));
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw config_error(origin + ":" + std::to_string(lineno) + ": expected key = value");
    if (section.empty())
      throw config_error(origin + ":" + std::to_string(lineno) + ": key outside any section");
    apply_kv(cfg, section, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
  }
  return cfg;
}

std::string num_to_string(const nlohmann::json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  throw config_error(path + ": expected a scalar value");
}

}  // namespace

RunConfig config_from_json(const nlohmann::json& root, const std::string& origin) {
  const nlohmann::json* doc = &root;
  if (root.is_object() && root.contains("config")) doc = &root.at("config");
  if (!doc->is_object()) throw config_error(origin + ": top level must be an object");

  RunConfig cfg;
  for (const auto& [section, body] : doc->items()) {
    if (!body.is_object()) throw config_error(origin + ": section '" + section + "' must be an object");
    for (const auto& [key, value] : body.items()) {
      const std::string path = section + "." + key;
      if (value.is_array()) {
        std::vector<double> list;
        for (const auto& e : value) {
          if (!e.is_number()) throw config_error(path + ": expected numeric array");
          list.push_back(e.get<double>());
        }
        if (section == "campaign" && key == "delta_ladder") cfg.campaign.delta_ladder = list;
        else if (section == "sweep" && key == "tmr_grid") cfg.sweep.tmr_grid = list;
        else if (section == "sweep" && key == "xi_values") cfg.sweep.xi_values = list;
        else throw config_error("unknown key: " + path);
        if (list.empty()) throw config_error(path + ": empty list");
      } else if (section == "campaign" && key == "seed" && value.is_number_unsigned()) {
        cfg.campaign.seed = value.get<uint64_t>();
        cfg.campaign.seed_set = true;
      } else {
        apply_kv(cfg, section, key, num_to_string(value, path));
      }
    }
  }
  return cfg;
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw config_error(origin + ": JSON parse error: " + e.what());
      }
      return config_from_json(j, origin);
    }
    break;
  }
  return parse_ini(text, origin);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

std::vector<double> RunConfig::campaign_grid() const {
  std::vector<double> grid(static_cast<size_t>(campaign.v_points));
  for (int i = 0; i < campaign.v_points; ++i)
    grid[static_cast<size_t>(i)] =
        campaign.v_min + (campaign.v_max - campaign.v_min) * i / (campaign.v_points - 1);
  return grid;
}

void RunConfig::validate() const {
  device.validate();
  pulse.validate();
  if (!campaign.seed_set) throw config_error("campaign.seed is mandatory");
  if (campaign.v_points < 2) throw config_error("campaign.v_points must be >= 2");
  if (!(campaign.v_max > campaign.v_min)) throw config_error("campaign: need v_max > v_min");
  if (campaign.v_min < 0.0) throw config_error("campaign.v_min must be >= 0 (magnitudes)");
  if (campaign.trials < 1) throw config_error("campaign.trials must be >= 1");
  for (double d : campaign.delta_ladder)
    if (d <= 0.0) throw config_error("campaign.delta_ladder values must be > 0");
  gate_by_name(gate.name);  // throws on unknown gate
  if (sweep.tmr_grid.empty()) throw config_error("sweep.tmr_grid must be nonempty");
  for (double t : sweep.tmr_grid)
    if (t <= 0.0) throw config_error("sweep.tmr_grid values must be > 0");
  if (sweep.xi_values.empty()) throw config_error("sweep.xi_values must be nonempty");
}

nlohmann::json config_to_json(const RunConfig& cfg) {
  nlohmann::json d{
      {"l_x", cfg.device.lx},
      {"l_y", cfg.device.ly},
      {"t_f", cfg.device.t_f},
      {"t_ox", cfg.device.t_ox},
      {"t_c", cfg.device.t_c},
      {"ra_p", cfg.device.ra_p},
      {"m_s0", cfg.device.ms0},
      {"p_0", cfg.device.p0},
      {"alpha", cfg.device.alpha},
      {"xi", cfg.device.xi},
      {"tsf", cfg.device.tsf_target},
      {"alpha_sp", cfg.device.alpha_sp},
      {"v_0", cfg.device.v0},
      {"h_ext_x", cfg.device.h_ext.x},
      {"h_ext_y", cfg.device.h_ext.y},
      {"h_ext_z", cfg.device.h_ext.z},
      {"t", cfg.device.temperature},
      {"noise_mode", cfg.device.noise_mode == NoiseMode::pinned ? "pinned" : "computed"},
      {"sigma_pinned_t", cfg.device.sigma_pinned_t},
  };
  if (cfg.device.tmr_override) d["tmr_override"] = *cfg.device.tmr_override;

  nlohmann::json c{
      {"v_min", cfg.campaign.v_min},     {"v_max", cfg.campaign.v_max},
      {"v_points", cfg.campaign.v_points}, {"trials", cfg.campaign.trials},
      {"seed", cfg.campaign.seed},       {"parallelism", cfg.campaign.parallelism},
  };
  if (!cfg.campaign.delta_ladder.empty()) c["delta_ladder"] = cfg.campaign.delta_ladder;

  return nlohmann::json{
      {"device", d},
      {"pulse",
       {{"amplitude", cfg.pulse.amplitude},
        {"duration", cfg.pulse.duration},
        {"dt", cfg.pulse.dt},
        {"relax_time", cfg.pulse.relax_time}}},
      {"campaign", c},
      {"gate", {{"name", cfg.gate.name}}},
      {"sweep", {{"tmr_grid", cfg.sweep.tmr_grid}, {"xi_values", cfg.sweep.xi_values}}},
      {"output", {{"dir", cfg.output.dir}}},
  };
}

}  // namespace cramsim
