#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cramsim/device.hpp"
#include "cramsim/sptc.hpp"

namespace cramsim {

enum class GateKind { NAND, AND, OR, NOR, MAJ };

// Logic convention: logic 0 <=> P (low resistance), logic 1 <=> AP.
// preset: output logic state written before the operation. polarity: sign of
// the logic voltage that drives the preset state's transition (+1 pulses
// switch P->AP, -1 switch AP->P).
struct GateSpec {
  std::string name;
  int arity = 2;
  std::vector<int> truth;  // indexed by combination, input i = (c >> (arity-1-i)) & 1
  int preset = 0;
  double polarity = 1.0;
};

GateSpec make_gate(GateKind kind);
GateSpec gate_by_name(const std::string& name);  // case-insensitive; throws config_error

// Combination string, MSB-first ("01" means input0=0, input1=1).
std::string combo_label(int combo, int arity);

struct LineSolution {
  double v_out = 0.0;  // across the output MTJ
  double i_line = 0.0;  // through the output MTJ
  std::vector<double> i_branch;
  int iterations = 0;
};

// Voltage divider of one logic line: input MTJs in parallel, in series with
// the output MTJ. Damped fixed-point iteration over the bias-dependent
// resistances; |dv| < 1e-9 V or numeric_error after 10000 iterations.
LineSolution solve_line(const DeviceParams& dev, const std::vector<MtjState>& inputs,
                        MtjState output_state, double v_logic);

struct ComboExpectation {
  int combo = 0;
  double v_out = 0.0;
  double p_switch = 0.0;
  double d_out = 0.0;  // <D_out>
  int expected = 0;
};

// Per-combination expected output. The SPTC must describe the preset state's
// transition for the same device/xi; v_out magnitudes address it directly.
std::vector<ComboExpectation> gate_expectation(const DeviceParams& dev, const GateSpec& gate,
                                               const Sptc& sptc, double v_logic);

// Mean (and max) deviation |<D_out> - truth| over all input combinations.
double error_rate(const DeviceParams& dev, const GateSpec& gate, const Sptc& sptc,
                  double v_logic);
double error_rate_worst(const DeviceParams& dev, const GateSpec& gate, const Sptc& sptc,
                        double v_logic);

// Golden-section minimizer on [a, b]; deterministic, tol in argument units.
double minimize_scalar(const std::function<double(double)>& f, double a, double b,
                       double tol = 1e-4);

// 201-point scan of error_rate over [v_lo, v_hi] followed by golden-section
// refinement of the best bracket. Returns (v_logic*, error*).
std::pair<double, double> optimize_logic_voltage(const DeviceParams& dev, const GateSpec& gate,
                                                 const Sptc& sptc, double v_lo, double v_hi);

// Mean logic-line dissipation over combinations: v_logic · i_line · duration.
double operation_energy(const DeviceParams& dev, const GateSpec& gate, double v_logic,
                        double pulse_duration);

struct SweepRow {
  double tmr = 0.0;
  double xi = 0.0;
  double v_opt = 0.0;
  double error = 0.0;
  double error_worst = 0.0;
  double energy = 0.0;
};

struct SweepSettings {
  std::vector<double> v_grid;
  int n_trials = 2000;
  uint64_t seed = 0;
  int parallelism = 0;
  PulseSpec pulse;  // amplitude sign replaced by the gate polarity
  double v_opt_lo = 0.01;
  double v_opt_hi = 3.0;
};

// One row per (tmr_override, xi): regenerated SPTC, optimized v_logic, error,
// energy. Each cell runs on a derived sub-seed; rows are emitted in grid order.
std::vector<SweepRow> tmr_sweep(const DeviceParams& dev_template, const GateSpec& gate,
                                const std::vector<double>& tmr_grid,
                                const std::vector<double>& xi_values,
                                const SweepSettings& settings);

}  // namespace cramsim
