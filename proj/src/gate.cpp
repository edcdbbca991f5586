#include "cramsim/gate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "cramsim/errors.hpp"

namespace cramsim {

GateSpec make_gate(GateKind kind) {
  switch (kind) {
    case GateKind::NAND:
      return {"nand", 2, {1, 1, 1, 0}, 0, +1.0};
    case GateKind::NOR:
      return {"nor", 2, {1, 0, 0, 0}, 0, +1.0};
    case GateKind::AND:
      return {"and", 2, {0, 0, 0, 1}, 1, -1.0};
    case GateKind::OR:
      return {"or", 2, {0, 1, 1, 1}, 1, -1.0};
    case GateKind::MAJ:
      return {"maj", 3, {0, 0, 0, 1, 0, 1, 1, 1}, 1, -1.0};
  }
  throw config_error("gate: unknown kind");
}

GateSpec gate_by_name(const std::string& name) {
  std::string low;
  for (char c : name) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (low == "nand") return make_gate(GateKind::NAND);
  if (low == "and") return make_gate(GateKind::AND);
  if (low == "or") return make_gate(GateKind::OR);
  if (low == "nor") return make_gate(GateKind::NOR);
  if (low == "maj") return make_gate(GateKind::MAJ);
  throw config_error("gate: unknown gate name '" + name + "'");
}

std::string combo_label(int combo, int arity) {
  std::string s(arity, '0');
  for (int i = 0; i < arity; ++i)
    if ((combo >> (arity - 1 - i)) & 1) s[static_cast<size_t>(i)] = '1';
  return s;
}

LineSolution solve_line(const DeviceParams& dev, const std::vector<MtjState>& inputs,
                        MtjState output_state, double v_logic) {
  if (v_logic < 0.0) throw domain_error("solve_line: v_logic must be >= 0 (magnitude)");
  if (inputs.empty()) throw domain_error("solve_line: need at least one input");
  const double t = dev.temperature;

  LineSolution sol;
  double v_out = v_logic / 2.0;
  double prev_delta = 0.0;
  constexpr double kTol = 1e-9;
  constexpr int kMaxIter = 10000;

  for (int it = 1; it <= kMaxIter; ++it) {
    const double v_in = v_logic - v_out;
    double g_par = 0.0;
    for (MtjState st : inputs) g_par += 1.0 / resistance(dev, st, t, v_in);
    const double r_par = 1.0 / g_par;
    const double r_out = resistance(dev, output_state, t, v_out);
    double v_new = v_logic * r_out / (r_par + r_out);

    const double delta = v_new - v_out;
    if (std::abs(delta) < kTol) {
      sol.v_out = v_new;
      sol.iterations = it;
      sol.i_line = v_new / resistance(dev, output_state, t, v_new);
      const double vi = v_logic - v_new;
      for (MtjState st : inputs) sol.i_branch.push_back(vi / resistance(dev, st, t, vi));
      return sol;
    }
    if (delta * prev_delta < 0.0) v_new = 0.5 * (v_out + v_new);  // damp oscillation
    prev_delta = delta;
    v_out = v_new;
  }
  throw numeric_error("solve_line: fixed point did not converge");
}

namespace {

std::vector<MtjState> combo_inputs(int combo, int arity) {
  std::vector<MtjState> st(static_cast<size_t>(arity));
  for (int i = 0; i < arity; ++i)
    st[static_cast<size_t>(i)] =
        ((combo >> (arity - 1 - i)) & 1) ? MtjState::AP : MtjState::P;
  return st;
}

}  // namespace

std::vector<ComboExpectation> gate_expectation(const DeviceParams& dev, const GateSpec& gate,
                                               const Sptc& sptc, double v_logic) {
  const MtjState out_state = (gate.preset == 0) ? MtjState::P : MtjState::AP;
  const int n_combo = 1 << gate.arity;
  std::vector<ComboExpectation> out;
  out.reserve(static_cast<size_t>(n_combo));
  for (int c = 0; c < n_combo; ++c) {
    const LineSolution sol = solve_line(dev, combo_inputs(c, gate.arity), out_state, v_logic);
    ComboExpectation e;
    e.combo = c;
    e.v_out = sol.v_out;
    e.p_switch = prob_at(sptc, sol.v_out);
    e.d_out = (gate.preset == 0) ? e.p_switch : 1.0 - e.p_switch;
    e.expected = gate.truth[static_cast<size_t>(c)];
    out.push_back(e);
  }
  return out;
}

double error_rate(const DeviceParams& dev, const GateSpec& gate, const Sptc& sptc,
                  double v_logic) {
  double sum = 0.0;
  const auto rows = gate_expectation(dev, gate, sptc, v_logic);
  for (const auto& r : rows) sum += std::abs(r.d_out - r.expected);
  return sum / static_cast<double>(rows.size());
}

double error_rate_worst(const DeviceParams& dev, const GateSpec& gate, const Sptc& sptc,
                        double v_logic) {
  double worst = 0.0;
  for (const auto& r : gate_expectation(dev, gate, sptc, v_logic))
    worst = std::max(worst, std::abs(r.d_out - r.expected));
  return worst;
}

double minimize_scalar(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b)) throw domain_error("minimize_scalar: need a < b");
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

std::pair<double, double> optimize_logic_voltage(const DeviceParams& dev, const GateSpec& gate,
                                                 const Sptc& sptc, double v_lo, double v_hi) {
  if (!(v_lo < v_hi)) throw config_error("optimize: invalid voltage range");
  constexpr int kScan = 201;
  auto err = [&](double v) { return error_rate(dev, gate, sptc, v); };

  int best = 0;
  double best_err = err(v_lo);
  std::vector<double> grid(kScan);
  for (int i = 0; i < kScan; ++i) {
    grid[static_cast<size_t>(i)] = v_lo + (v_hi - v_lo) * i / (kScan - 1);
    const double e = err(grid[static_cast<size_t>(i)]);
    if (e < best_err) {
      best_err = e;
      best = i;
    }
  }
  const double a = grid[static_cast<size_t>(std::max(0, best - 1))];
  const double b = grid[static_cast<size_t>(std::min(kScan - 1, best + 1))];
  const double v_ref = minimize_scalar(err, a, b, 1e-4);
  const double e_ref = err(v_ref);
  if (e_ref <= best_err) return {v_ref, e_ref};
  return {grid[static_cast<size_t>(best)], best_err};
}

double operation_energy(const DeviceParams& dev, const GateSpec& gate, double v_logic,
                        double pulse_duration) {
  const MtjState out_state = (gate.preset == 0) ? MtjState::P : MtjState::AP;
  const int n_combo = 1 << gate.arity;
  double sum = 0.0;
  for (int c = 0; c < n_combo; ++c) {
    const LineSolution sol = solve_line(dev, combo_inputs(c, gate.arity), out_state, v_logic);
    sum += v_logic * sol.i_line;
  }
  return sum / n_combo * pulse_duration;
}

std::vector<SweepRow> tmr_sweep(const DeviceParams& dev_template, const GateSpec& gate,
                                const std::vector<double>& tmr_grid,
                                const std::vector<double>& xi_values,
                                const SweepSettings& settings) {
  for (double tmr : tmr_grid)
    if (tmr <= 0.0) throw config_error("sweep: tmr grid values must be > 0");

  std::vector<SweepRow> rows;
  rows.reserve(tmr_grid.size() * xi_values.size());
  uint64_t cell = 0;
  for (double tmr : tmr_grid) {
    for (double xi : xi_values) {
      DeviceParams dev = dev_template;
      dev.tmr_override = tmr;
      dev.xi = xi;
      dev = calibrated(dev);

      PulseSpec tmpl = settings.pulse;
      tmpl.amplitude = gate.polarity;
      const Sptc sptc = run_sptc(dev, tmpl, settings.v_grid, settings.n_trials,
                                 derive_seed(settings.seed, cell), settings.parallelism);
      const auto [v_opt, err] =
          optimize_logic_voltage(dev, gate, sptc, settings.v_opt_lo, settings.v_opt_hi);

      SweepRow row;
      row.tmr = tmr;
      row.xi = xi;
      row.v_opt = v_opt;
      row.error = err;
      row.error_worst = error_rate_worst(dev, gate, sptc, v_opt);
      row.energy = operation_energy(dev, gate, v_opt, settings.pulse.duration);
      rows.push_back(row);
      ++cell;
    }
  }
  return rows;
}

}  // namespace cramsim
