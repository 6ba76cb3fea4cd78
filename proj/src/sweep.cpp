#include "pairdiss/sweep.hpp"

#include <cmath>
#include <map>
#include <string>

#include "pairdiss/error.hpp"
#include "pairdiss/format.hpp"

namespace pairdiss {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string_view axis_column(SweepMode mode) {
  switch (mode) {
    case SweepMode::Beta0: return "omega_beta0";
    case SweepMode::BetaBath: return "omega_beta_bath";
    case SweepMode::R: return "r_grid";
    case SweepMode::Evolve: return "t";
  }
  return "x";
}

double require_bath(const FixedParams& f) {
  if (!f.omega_beta_bath)
    throw Error(ErrorCode::InvalidArgument, "omega_beta_bath is required for this mode");
  return *f.omega_beta_bath;
}

// r for modes where it is not the swept axis.
double fixed_r(const FixedParams& f) {
  if (f.r && f.omega_beta0)
    throw Error(ErrorCode::InvalidArgument, "give either r or omega_beta0, not both");
  if (f.r) return *f.r;
  if (f.omega_beta0) return r_from_initial_beta(*f.omega_beta0);
  throw Error(ErrorCode::InvalidArgument, "r or omega_beta0 is required for this mode");
}

}  // namespace

std::string_view to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::Beta0: return "sweep-beta0";
    case SweepMode::BetaBath: return "sweep-betaB";
    case SweepMode::R: return "sweep-r";
    case SweepMode::Evolve: return "evolve";
  }
  return "unknown";
}

SweepMode parse_sweep_mode(std::string_view text) {
  if (text == "sweep-beta0" || text == "beta0") return SweepMode::Beta0;
  if (text == "sweep-betaB" || text == "betaB") return SweepMode::BetaBath;
  if (text == "sweep-r" || text == "r") return SweepMode::R;
  if (text == "evolve") return SweepMode::Evolve;
  throw Error(ErrorCode::InvalidArgument, "unknown sweep mode '" + std::string(text) + "'");
}

std::string_view to_string(Dissipation d) {
  return d == Dissipation::Collective ? "collective" : "independent";
}

Dissipation parse_dissipation(std::string_view text) {
  if (text == "collective") return Dissipation::Collective;
  if (text == "independent") return Dissipation::Independent;
  throw Error(ErrorCode::InvalidArgument, "unknown dissipation '" + std::string(text) + "'");
}

Grid Grid::range(double min, double max, int steps) {
  Grid g;
  g.min = min;
  g.max = max;
  g.steps = steps;
  return g;
}

Grid Grid::parse(std::string_view spec) {
  Grid g;
  if (spec.find(':') != std::string_view::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 2 && parts.size() != 3)
      throw Error(ErrorCode::InvalidArgument, "grid must be min:max[:steps]");
    g.min = parse_extended_real(parts[0]);
    g.max = parse_extended_real(parts[1]);
    if (parts.size() == 3) {
      const double steps = parse_extended_real(parts[2]);
      if (steps != std::floor(steps) || steps > 1e7)
        throw Error(ErrorCode::InvalidArgument, "grid steps must be an integer");
      g.steps = static_cast<int>(steps);
    }
  } else {
    for (const auto& item : split(spec, ',')) g.values.push_back(parse_extended_real(item));
  }
  g.validate();
  return g;
}

void Grid::validate() const {
  if (!values.empty()) return;
  if (!std::isfinite(min) || !std::isfinite(max))
    throw Error(ErrorCode::InvalidArgument, "grid range bounds must be finite; use a list for inf");
  if (!(min < max)) throw Error(ErrorCode::InvalidArgument, "grid needs min < max");
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 steps");
}

std::vector<double> Grid::points() const {
  validate();
  if (!values.empty()) return values;
  std::vector<double> pts(static_cast<std::size_t>(steps));
  const double span = max - min;
  for (int i = 0; i < steps; ++i) pts[i] = min + span * i / (steps - 1);
  pts.back() = max;
  return pts;
}

std::string Grid::describe() const {
  if (values.empty())
    return format_number(min) + ":" + format_number(max) + ":" + std::to_string(steps);
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + format_number(values[i]);
  return s;
}

void SweepConfig::validate() const {
  grid.validate();
  if (!(fixed.gamma > 0.0) || !std::isfinite(fixed.gamma))
    throw Error(ErrorCode::InvalidArgument, "gamma must be positive");
  switch (mode) {
    case SweepMode::Beta0:
    case SweepMode::R:
      require_bath(fixed);
      break;
    case SweepMode::BetaBath:
      fixed_r(fixed);
      break;
    case SweepMode::Evolve:
      require_bath(fixed);
      if (fixed.omega_beta0 && fixed.initial_populations)
        throw Error(ErrorCode::InvalidArgument,
                    "give either omega_beta0 or explicit populations, not both");
      break;
  }
  if (mode == SweepMode::R) {
    for (double r : grid.points())
      if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::InvalidArgument, "r grid must lie in [0, 1]");
  }
  if (reference_rows && mode != SweepMode::R)
    throw Error(ErrorCode::InvalidArgument, "reference rows are only defined for r sweeps");
}

SweepRow compute_row(const SweepConfig& config, double swept_value) {
  double x = 0.0;
  double r = 0.0;
  switch (config.mode) {
    case SweepMode::Beta0:
      x = require_bath(config.fixed);
      r = r_from_initial_beta(swept_value);
      break;
    case SweepMode::BetaBath:
      x = swept_value;
      r = fixed_r(config.fixed);
      break;
    case SweepMode::R:
      x = require_bath(config.fixed);
      r = swept_value;
      break;
    case SweepMode::Evolve:
      throw Error(ErrorCode::InvalidArgument, "evolve configs do not produce sweep rows");
  }
  const SteadyStateParams params(x, r);
  const auto rep = observe(params);
  SweepRow row{};
  row.swept = swept_value;
  row.r = r;
  row.c = rep.coherence_c;
  row.e_ss = rep.energy_ss;
  row.e_th = rep.energy_th;
  row.e_ratio = rep.energy_ss / rep.energy_th;
  row.s_ss = rep.entropy_ss;
  row.s_th = rep.entropy_th;
  row.s_ratio = rep.entropy_ss / rep.entropy_th;
  row.omega_beta_loc = rep.local_beta;
  row.omega_over_apparent_t = rep.apparent_temp_inverse;
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<SweepRow> rows;
  for (double v : config.grid.points()) rows.push_back(compute_row(config, v));
  return rows;
}

std::vector<std::string> describe(const SweepConfig& config) {
  const auto& f = config.fixed;
  std::vector<std::string> lines;
  lines.push_back("pairdiss " + std::string(kVersion));
  lines.push_back("mode=" + std::string(to_string(config.mode)));
  if (!config.preset.empty()) lines.push_back("preset=" + config.preset);
  if (config.mode != SweepMode::Evolve) lines.push_back("grid=" + config.grid.describe());
  if (f.omega_beta_bath) lines.push_back("omega_beta_bath=" + format_number(*f.omega_beta_bath));
  if (f.omega_beta0) lines.push_back("omega_beta0=" + format_number(*f.omega_beta0));
  if (f.r) lines.push_back("r=" + format_number(*f.r));
  if (f.initial_populations) {
    const auto& p = *f.initial_populations;
    lines.push_back("populations=" + format_number(p.p0) + "," + format_number(p.pplus) + "," +
                    format_number(p.pminus) + "," + format_number(p.p1));
  }
  lines.push_back("gamma=" + format_number(f.gamma));
  lines.push_back("lamb_shift=" + format_number(f.lamb_shift));
  lines.push_back("interaction=" + format_number(f.interaction));
  if (config.mode == SweepMode::Evolve) {
    lines.push_back("dissipation=" + std::string(to_string(f.dissipation)));
    if (f.t_max) lines.push_back("t_max=" + format_number(*f.t_max));
    if (f.dt) lines.push_back("dt=" + format_number(*f.dt));
    lines.push_back("every=" + std::to_string(f.sample_every));
  }
  return lines;
}

void write_sweep_csv(std::ostream& out, const SweepConfig& config,
                     const std::vector<SweepRow>& rows) {
  for (const auto& line : describe(config)) out << "# " << line << '\n';
  if (config.reference_rows) {
    const double x = require_bath(config.fixed);
    const auto crit = entropy_critical_r(x);
    const auto crossing = entropy_crossing_r_star(x);
    out << "# reference r_cr=" << format_number(crit.r_cr) << '\n';
    out << "# reference r_star=" << format_number(crossing.r_star) << '\n';
    out << "# reference z=" << format_number(r_from_initial_beta(x)) << '\n';
  }
  out << axis_column(config.mode)
      << ",r,c,E_ss,E_th,E_ratio,S_ss,S_th,S_ratio,omega_beta_loc,omega_over_apparent_T\n";
  for (const auto& row : rows) {
    out << format_number(row.swept) << ',' << format_number(row.r) << ',' << format_number(row.c)
        << ',' << format_number(row.e_ss) << ',' << format_number(row.e_th) << ','
        << format_number(row.e_ratio) << ',' << format_number(row.s_ss) << ','
        << format_number(row.s_th) << ',' << format_number(row.s_ratio) << ','
        << format_number(row.omega_beta_loc) << ',' << format_number(row.omega_over_apparent_t)
        << '\n';
  }
}

namespace {

SweepConfig bath_sweep(std::string name, double lo, double hi, double omega_beta0) {
  SweepConfig c;
  c.mode = SweepMode::BetaBath;
  c.grid = Grid::range(lo, hi);
  c.fixed.omega_beta0 = omega_beta0;
  c.preset = std::move(name);
  return c;
}

SweepConfig init_sweep(std::string name, double omega_beta_bath) {
  SweepConfig c;
  c.mode = SweepMode::Beta0;
  c.grid = Grid::range(-6.0, 6.0);
  c.fixed.omega_beta_bath = omega_beta_bath;
  c.preset = std::move(name);
  return c;
}

const std::map<std::string, SweepConfig, std::less<>>& presets() {
  static const auto table = [] {
    std::map<std::string, SweepConfig, std::less<>> t;
    // Energy versus the initial temperature.
    t["fig1a"] = init_sweep("fig1a", 2.0);
    t["fig1b"] = init_sweep("fig1b", -2.0);
    // Energy versus the bath temperature; |beta_0| >> 1 is r = 1, beta_0 = 0 is r = 3/4.
    t["fig2"] = bath_sweep("fig2", 0.0, 4.0, kInf);
    t["fig3"] = bath_sweep("fig3", 0.0, 4.0, 0.0);
    t["fig4"] = bath_sweep("fig4", -4.0, 0.0, 0.0);
    t["fig5"] = bath_sweep("fig5", -4.0, 0.0, kInf);
    // Entropy versus the initial temperature.
    t["fig6"] = init_sweep("fig6", 2.0);
    // Entropy versus the bath temperature.
    t["fig7a"] = bath_sweep("fig7a", 0.0, 8.0, kInf);
    t["fig7b"] = bath_sweep("fig7b", 0.0, 8.0, 0.0);
    t["fig7c"] = bath_sweep("fig7c", 0.0, 8.0, 3.0);
    t["loctemp"] = bath_sweep("loctemp", 0.0, 4.0, kInf);

    SweepConfig entropr;
    entropr.mode = SweepMode::R;
    entropr.grid = Grid::range(0.0, 1.0);
    entropr.fixed.omega_beta_bath = 2.0;
    entropr.preset = "entropr";
    entropr.reference_rows = true;
    t["entropr"] = entropr;
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& figure_preset_names() {
  static const std::vector<std::string> names = {"fig1a", "fig1b", "fig2",  "fig3",
                                                 "fig4",  "fig5",  "fig6",  "fig7a",
                                                 "fig7b", "fig7c", "loctemp", "entropr"};
  return names;
}

SweepConfig figure_preset(std::string_view name) {
  const auto it = presets().find(name);
  if (it == presets().end())
    throw Error(ErrorCode::InvalidArgument, "unknown figure preset '" + std::string(name) + "'");
  return it->second;
}

EvolveSummary run_evolve(const SweepConfig& config, std::ostream& out) {
  if (config.mode != SweepMode::Evolve)
    throw Error(ErrorCode::InvalidArgument, "run_evolve needs an evolve config");
  config.validate();
  const auto& f = config.fixed;
  const BathSpec bath(f.gamma, *f.omega_beta_bath, f.lamb_shift, f.interaction);
  const double t_max = f.t_max.value_or(30.0 / f.gamma);
  const double dt = f.dt.value_or(0.005 / f.gamma);

  const DensityMatrix rho0 = f.initial_populations
                                 ? from_bell_populations(*f.initial_populations)
                                 : thermal_state(f.omega_beta0.value_or(0.0));
  const bool collective = f.dissipation == Dissipation::Collective;
  const Superoperator generator =
      collective ? liouvillian_collective(bath) : liouvillian_independent(bath);
  const Trajectory traj = evolve(rho0, generator, t_max, dt, f.sample_every);

  const DensityMatrix fixed_point =
      collective ? steady_state_analytic(bath.omega_beta_bath(), to_bell_populations(rho0).r)
                 : thermal_state(bath.omega_beta_bath());

  const DensityMatrix& last = traj.final_state();
  EvolveSummary s{};
  s.t_final = traj.times.back();
  s.trace_distance_to_fixed_point = trace_distance(last, fixed_point);
  s.energy = (free_hamiltonian(1.0) * last.pair()).trace().real();
  s.entropy = von_neumann_entropy(last);
  s.r = to_bell_populations(last).r;
  s.coherence_c = (last(1, 2) + last(2, 1)).real();
  s.omega_over_apparent_t = apparent_temperature(last);

  for (const auto& line : describe(config)) out << "# " << line << '\n';
  write_trajectory_csv(out, traj);
  out << "# final,t=" << format_number(s.t_final)
      << ",trace_distance=" << format_number(s.trace_distance_to_fixed_point)
      << ",energy=" << format_number(s.energy) << ",entropy=" << format_number(s.entropy)
      << ",r=" << format_number(s.r) << ",c=" << format_number(s.coherence_c)
      << ",omega_over_apparent_T=" << format_number(s.omega_over_apparent_t) << '\n';
  return s;
}

}  // namespace pairdiss
