#include "cramsim/commands.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <vector>

#include "cramsim/config.hpp"
#include "cramsim/errors.hpp"
#include "cramsim/gate.hpp"
#include "cramsim/manifest.hpp"
#include "cramsim/physics.hpp"
#include "cramsim/sptc.hpp"

namespace cramsim {

namespace {

// All floating-point output carries 9 significant digits.
std::string fmt9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw numeric_error("cannot write " + path);
  return out;
}

void write_sptc_csv(const std::string& path, const Sptc& s) {
  auto out = open_out(path);
  out << "v_volts,p_raw,p_iso,n,ci_lo,ci_hi\n";
  for (size_t i = 0; i < s.v.size(); ++i)
    out << fmt9(s.v[i]) << ',' << fmt9(s.p_raw[i]) << ',' << fmt9(s.p_iso[i]) << ','
        << s.n_trials << ',' << fmt9(s.ci_lo[i]) << ',' << fmt9(s.ci_hi[i]) << '\n';
}

// Complement table; requires a defined v50. Returns false when the curve
// never reaches 50% (file skipped, caller notes it).
bool write_complement_csv(const std::string& path, const Sptc& s) {
  std::vector<ComplementRow> rows;
  try {
    rows = complement_curves(s);
  } catch (const numeric_error&) {
    return false;
  }
  auto out = open_out(path);
  out << "v_norm,p,q\n";
  for (const auto& r : rows)
    out << fmt9(r.v_norm) << ',' << fmt9(r.p) << ',' << fmt9(r.q) << '\n';
  return true;
}

struct RunContext {
  RunConfig cfg;
  std::string out_dir;
  std::map<std::string, std::string> checksums;

  void add_checksum(const std::string& filename) {
    checksums[filename] = fnv1a_hex(fnv1a_file(out_dir + "/" + filename));
  }
};

void cmd_calibrate(RunContext& ctx) {
  const DeviceParams dev = calibrated(ctx.cfg.device);
  std::string body = "{\n  \"k_int0\": " + fmt9(dev.k_int0) + ",\n  \"delta\": [";
  constexpr int kPoints = 11;
  for (int i = 0; i < kPoints; ++i) {
    const double v = ctx.cfg.campaign.v_min +
                     (ctx.cfg.campaign.v_max - ctx.cfg.campaign.v_min) * i / (kPoints - 1);
    body += (i ? ",\n    " : "\n    ");
    body += "{\"v\": " + fmt9(v) + ", \"delta\": " + fmt9(thermal_stability(dev, v)) + "}";
  }
  body += "\n  ]\n}\n";
  open_out(ctx.out_dir + "/calibration.json") << body;
  ctx.add_checksum("calibration.json");

  std::cout << "k_int0 = " << fmt9(dev.k_int0) << " J/m^2\n"
            << "delta(0) = " << fmt9(thermal_stability(dev, 0.0)) << "\n";
}

void cmd_trajectory(RunContext& ctx) {
  const DeviceParams dev = calibrated(ctx.cfg.device);
  const MtjState start = (ctx.cfg.pulse.amplitude < 0.0) ? MtjState::AP : MtjState::P;
  RngStream rng(ctx.cfg.campaign.seed, 0);
  const Trajectory traj = simulate_pulse(dev, ctx.cfg.pulse, start, rng, /*record=*/true);

  auto out = open_out(ctx.out_dir + "/trajectory.csv");
  out << "t_s,mx,my,mz\n";
  for (size_t i = 0; i < traj.t.size(); ++i)
    out << fmt9(traj.t[i]) << ',' << fmt9(traj.m[i].x) << ',' << fmt9(traj.m[i].y) << ','
        << fmt9(traj.m[i].z) << '\n';
  out.close();
  ctx.add_checksum("trajectory.csv");

  std::cout << "switched = " << (traj.switched ? "true" : "false") << "\n";
  if (traj.switch_time)
    std::cout << "switch_time_s = " << fmt9(*traj.switch_time) << "\n";
  std::cout << "m_final = (" << fmt9(traj.m_final.x) << ", " << fmt9(traj.m_final.y) << ", "
            << fmt9(traj.m_final.z) << ")\n";
}

void report_curve(const std::string& label, const Sptc& s) {
  std::string stats;
  try {
    stats = " v50_V = " + fmt9(v50(s)) + " width_V = " + fmt9(steepness(s));
  } catch (const numeric_error&) {
    stats = " v50_V = n/a (curve does not cross the level on this grid)";
  }
  std::cout << label << stats << "\n";
}

void cmd_sptc(RunContext& ctx) {
  const auto grid = ctx.cfg.campaign_grid();
  const auto& camp = ctx.cfg.campaign;

  if (camp.delta_ladder.empty()) {
    const DeviceParams dev = calibrated(ctx.cfg.device);
    const Sptc s = run_sptc(dev, ctx.cfg.pulse, grid, camp.trials, camp.seed, camp.parallelism);
    write_sptc_csv(ctx.out_dir + "/sptc.csv", s);
    ctx.add_checksum("sptc.csv");
    if (write_complement_csv(ctx.out_dir + "/complement.csv", s))
      ctx.add_checksum("complement.csv");
    else
      std::cout << "complement.csv skipped: no 50% crossing\n";
    report_curve("sptc:", s);
    return;
  }

  for (size_t i = 0; i < camp.delta_ladder.size(); ++i) {
    const double delta = camp.delta_ladder[i];
    DeviceParams dev = ctx.cfg.device;
    dev.tsf_target = delta;
    dev = calibrated(dev);
    const Sptc s = run_sptc(dev, ctx.cfg.pulse, grid, camp.trials,
                            derive_seed(camp.seed, i), camp.parallelism);
    const std::string tag = "_delta_" + fmt9(delta);
    write_sptc_csv(ctx.out_dir + "/sptc" + tag + ".csv", s);
    ctx.add_checksum("sptc" + tag + ".csv");
    if (write_complement_csv(ctx.out_dir + "/complement" + tag + ".csv", s))
      ctx.add_checksum("complement" + tag + ".csv");
    report_curve("sptc delta=" + fmt9(delta) + ":", s);
  }
}

void cmd_gate(RunContext& ctx) {
  const GateSpec gate = gate_by_name(ctx.cfg.gate.name);
  const DeviceParams dev = calibrated(ctx.cfg.device);
  const auto& camp = ctx.cfg.campaign;

  PulseSpec tmpl = ctx.cfg.pulse;
  tmpl.amplitude = gate.polarity;
  const Sptc s =
      run_sptc(dev, tmpl, ctx.cfg.campaign_grid(), camp.trials, camp.seed, camp.parallelism);

  constexpr double kVLo = 0.01, kVHi = 3.0;
  const auto [v_opt, err] = optimize_logic_voltage(dev, gate, s, kVLo, kVHi);
  const double err_worst = error_rate_worst(dev, gate, s, v_opt);
  const double energy = operation_energy(dev, gate, v_opt, ctx.cfg.pulse.duration);

  // report grid: 61 logic-voltage points, all combinations each
  auto out = open_out(ctx.out_dir + "/gate.csv");
  out << "v_logic_V,combo,v_out_V,p_switch,d_out_expect,d_out_mean\n";
  constexpr int kReport = 61;
  for (int i = 0; i < kReport; ++i) {
    const double v_logic = kVHi * i / (kReport - 1);
    for (const auto& row : gate_expectation(dev, gate, s, v_logic))
      out << fmt9(v_logic) << ',' << combo_label(row.combo, gate.arity) << ','
          << fmt9(row.v_out) << ',' << fmt9(row.p_switch) << ',' << row.expected << ','
          << fmt9(row.d_out) << '\n';
  }
  out.close();
  ctx.add_checksum("gate.csv");

  std::string summary = "{\n  \"gate\": \"" + gate.name + "\",\n";
  summary += "  \"v_logic_opt_V\": " + fmt9(v_opt) + ",\n";
  summary += "  \"error_rate\": " + fmt9(err) + ",\n";
  summary += "  \"error_rate_worst\": " + fmt9(err_worst) + ",\n";
  summary += "  \"energy_J\": " + fmt9(energy) + ",\n  \"combos\": [";
  const auto rows = gate_expectation(dev, gate, s, v_opt);
  for (size_t i = 0; i < rows.size(); ++i) {
    summary += (i ? ",\n    " : "\n    ");
    summary += "{\"combo\": \"" + combo_label(rows[i].combo, gate.arity) +
               "\", \"v_out_V\": " + fmt9(rows[i].v_out) +
               ", \"p_switch\": " + fmt9(rows[i].p_switch) +
               ", \"d_out_expect\": " + std::to_string(rows[i].expected) +
               ", \"d_out_mean\": " + fmt9(rows[i].d_out) + "}";
  }
  summary += "\n  ]\n}\n";
  open_out(ctx.out_dir + "/gate_summary.json") << summary;
  ctx.add_checksum("gate_summary.json");

  std::cout << "gate = " << gate.name << "\n"
            << "v_logic_opt_V = " << fmt9(v_opt) << "\n"
            << "error_rate = " << fmt9(err) << "\n"
            << "error_rate_worst = " << fmt9(err_worst) << "\n"
            << "energy_J = " << fmt9(energy) << "\n";
}

void cmd_sweep(RunContext& ctx) {
  const GateSpec gate = gate_by_name(ctx.cfg.gate.name);
  const auto& camp = ctx.cfg.campaign;

  SweepSettings settings;
  settings.v_grid = ctx.cfg.campaign_grid();
  settings.n_trials = camp.trials;
  settings.seed = camp.seed;
  settings.parallelism = camp.parallelism;
  settings.pulse = ctx.cfg.pulse;

  const auto rows =
      tmr_sweep(ctx.cfg.device, gate, ctx.cfg.sweep.tmr_grid, ctx.cfg.sweep.xi_values, settings);

  auto out = open_out(ctx.out_dir + "/sweep.csv");
  out << "tmr_ratio,xi_fJ_per_Vm,v_logic_opt_V,error_rate,error_rate_worst,energy_J\n";
  for (const auto& r : rows) {
    const std::string line = fmt9(r.tmr) + "," + fmt9(r.xi * 1e15) + "," + fmt9(r.v_opt) + "," +
                             fmt9(r.error) + "," + fmt9(r.error_worst) + "," + fmt9(r.energy);
    out << line << '\n';
    std::cout << line << "\n";
  }
  out.close();
  ctx.add_checksum("sweep.csv");
}

}  // namespace

int run_command(const std::string& command, const CliOverrides& ov) {
  RunContext ctx;
  if (ov.config_path) ctx.cfg = load_config_file(*ov.config_path);
  if (ov.seed) {
    ctx.cfg.campaign.seed = *ov.seed;
    ctx.cfg.campaign.seed_set = true;
  }
  if (ov.trials) ctx.cfg.campaign.trials = *ov.trials;
  if (ov.xi) ctx.cfg.device.xi = *ov.xi;
  if (ov.tmr) ctx.cfg.device.tmr_override = *ov.tmr;
  if (ov.out_dir) ctx.cfg.output.dir = *ov.out_dir;
  if (ctx.cfg.output.dir.empty()) {
    if (const char* env = std::getenv("CRAMSIM_OUT")) ctx.cfg.output.dir = env;
  }
  if (ctx.cfg.output.dir.empty()) ctx.cfg.output.dir = ".";
  ctx.cfg.validate();

  ctx.out_dir = ctx.cfg.output.dir;
  std::filesystem::create_directories(ctx.out_dir);

  // manifest first; rewritten with wall clock + checksums once results exist
  write_manifest(ctx.out_dir, ctx.cfg, command, 0.0, {});
  const auto t0 = std::chrono::steady_clock::now();

  if (command == "calibrate") cmd_calibrate(ctx);
  else if (command == "trajectory") cmd_trajectory(ctx);
  else if (command == "sptc") cmd_sptc(ctx);
  else if (command == "gate") cmd_gate(ctx);
  else if (command == "sweep") cmd_sweep(ctx);
  else throw config_error("unknown command: " + command);

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(ctx.out_dir, ctx.cfg, command, wall, ctx.checksums);
  return 0;
}

}  // namespace cramsim
