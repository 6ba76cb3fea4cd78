#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pairdiss/dynamics.hpp"
#include "pairdiss/error.hpp"
#include "pairdiss/format.hpp"
#include "pairdiss/sweep.hpp"
#include "pairdiss/thermo.hpp"

namespace {

using namespace pairdiss;

struct RawOptions {
  std::optional<std::string> omega_beta_bath;
  std::optional<std::string> omega_beta_init;
  std::optional<std::string> r;
  std::string gamma = "1";
  std::string lamb_shift = "0";
  std::string interaction = "0";
  std::optional<std::string> t_max;
  std::optional<std::string> dt;
  std::string dissipation = "collective";
  std::optional<std::string> grid;
  std::optional<std::string> populations;
  std::size_t every = 1;
  std::string output;
};

std::optional<double> number(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_extended_real(*text);
}

double finite_number(const std::string& text, const char* what) {
  const double v = parse_extended_real(text);
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be finite");
  return v;
}

FixedParams fixed_params(const RawOptions& raw) {
  FixedParams f;
  f.omega_beta_bath = number(raw.omega_beta_bath);
  f.omega_beta0 = number(raw.omega_beta_init);
  f.r = number(raw.r);
  f.gamma = finite_number(raw.gamma, "gamma");
  f.lamb_shift = finite_number(raw.lamb_shift, "lamb shift");
  f.interaction = finite_number(raw.interaction, "interaction");
  f.t_max = number(raw.t_max);
  f.dt = number(raw.dt);
  f.dissipation = parse_dissipation(raw.dissipation);
  if (raw.populations) {
    const auto parts = split(*raw.populations, ',');
    if (parts.size() != 4)
      throw Error(ErrorCode::InvalidArgument, "populations need four values p0,p+,p-,p1");
    f.initial_populations = BellPopulations::make(
        parse_extended_real(parts[0]), parse_extended_real(parts[1]),
        parse_extended_real(parts[2]), parse_extended_real(parts[3]));
  }
  if (raw.every == 0) throw Error(ErrorCode::InvalidArgument, "--every must be at least 1");
  f.sample_every = raw.every;
  return f;
}

// Files are opened only after the whole CSV has been built.
template <typename Writer>
void emit(const std::string& path, Writer&& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  std::ostringstream buffer;
  writer(buffer);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  file << buffer.str();
  if (!file.flush()) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

void run_steady_state(const RawOptions& raw, bool numeric) {
  const FixedParams f = fixed_params(raw);
  if (!f.omega_beta_bath) throw Error(ErrorCode::InvalidArgument, "--omega-beta-bath is required");
  if (f.r && f.omega_beta0)
    throw Error(ErrorCode::InvalidArgument, "give either --r or --omega-beta-init, not both");
  const double x = *f.omega_beta_bath;
  const double r = f.r ? *f.r : r_from_initial_beta(f.omega_beta0.value_or(0.0));
  const SteadyStateParams params(x, r);
  const auto rep = observe(params);
  const auto pops = steady_state_populations(x, r);

  std::optional<double> numeric_distance;
  if (numeric) {
    const BathSpec bath(f.gamma, x, f.lamb_shift, f.interaction);
    numeric_distance = trace_distance(steady_state_numeric(liouvillian_collective(bath), r),
                                      steady_state_analytic(x, r));
  }

  emit(raw.output, [&](std::ostream& out) {
    out << "# pairdiss " << kVersion << '\n'
        << "# mode=steady-state\n"
        << "# omega_beta_bath=" << format_number(x) << '\n'
        << "# r=" << format_number(r) << '\n'
        << "# gamma=" << format_number(f.gamma) << '\n';
    out << "omega_beta_bath,r,p0,p_plus,p_minus,p1,c,E_ss,E_th,S_ss,S_th,omega_beta_loc,"
           "omega_over_apparent_T";
    if (numeric) out << ",numeric_trace_distance";
    out << '\n';
    out << format_number(x) << ',' << format_number(r) << ',' << format_number(pops.p0) << ','
        << format_number(pops.pplus) << ',' << format_number(pops.pminus) << ','
        << format_number(pops.p1) << ',' << format_number(rep.coherence_c) << ','
        << format_number(rep.energy_ss) << ',' << format_number(rep.energy_th) << ','
        << format_number(rep.entropy_ss) << ',' << format_number(rep.entropy_th) << ','
        << format_number(rep.local_beta) << ',' << format_number(rep.apparent_temp_inverse);
    if (numeric) out << ',' << format_number(numeric_distance);
    out << '\n';
  });
}

void run_evolve_command(const RawOptions& raw) {
  SweepConfig config;
  config.mode = SweepMode::Evolve;
  config.fixed = fixed_params(raw);
  config.output_path = raw.output;
  emit(raw.output, [&](std::ostream& out) { run_evolve(config, out); });
}

void run_sweep_command(const RawOptions& raw, const std::string& axis) {
  SweepConfig config;
  config.mode = parse_sweep_mode(axis);
  if (config.mode == SweepMode::Evolve)
    throw Error(ErrorCode::Usage, "use the evolve subcommand for trajectories");
  if (!raw.grid) throw Error(ErrorCode::InvalidArgument, "--grid is required for sweeps");
  config.grid = Grid::parse(*raw.grid);
  config.fixed = fixed_params(raw);
  // The swept quantity must not also be fixed.
  if (config.mode == SweepMode::Beta0 && (config.fixed.omega_beta0 || config.fixed.r))
    throw Error(ErrorCode::InvalidArgument, "beta0 sweeps fix neither --r nor --omega-beta-init");
  if (config.mode == SweepMode::BetaBath && config.fixed.omega_beta_bath)
    throw Error(ErrorCode::InvalidArgument, "betaB sweeps take no --omega-beta-bath");
  if (config.mode == SweepMode::R && (config.fixed.r || config.fixed.omega_beta0))
    throw Error(ErrorCode::InvalidArgument, "r sweeps fix neither --r nor --omega-beta-init");
  config.output_path = raw.output;
  const auto rows = run_sweep(config);
  emit(raw.output, [&](std::ostream& out) { write_sweep_csv(out, config, rows); });
}

void run_figure_command(const RawOptions& raw, const std::string& name, bool list) {
  if (list) {
    for (const auto& n : figure_preset_names()) std::cout << n << '\n';
    return;
  }
  if (name.empty()) throw Error(ErrorCode::Usage, "figure needs a preset name or --list");
  SweepConfig config = figure_preset(name);
  if (raw.grid) {
    // Only the density may change; the axis range stays that of the preset.
    const Grid g = Grid::parse(*raw.grid);
    if (!g.values.empty() || g.min != config.grid.min || g.max != config.grid.max)
      throw Error(ErrorCode::InvalidArgument, "figure presets only accept a new step count");
    config.grid.steps = g.steps;
  }
  config.output_path = raw.output;
  const auto rows = run_sweep(config);
  emit(raw.output, [&](std::ostream& out) { write_sweep_csv(out, config, rows); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collective dissipation of a qubit pair: steady states, dynamics and sweeps"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.set_config("--config", "", "Read key=value defaults; command-line flags take precedence");

  RawOptions raw;
  app.add_option("--omega-beta-bath", raw.omega_beta_bath, "Bath omega*beta_B (inf/-inf allowed)");
  app.add_option("--omega-beta-init", raw.omega_beta_init,
                 "Initial thermal omega*beta_0; fixes r = Z+/Z");
  app.add_option("--r", raw.r, "Bright-manifold population r in [0,1]");
  app.add_option("--gamma", raw.gamma, "Spontaneous emission rate")->capture_default_str();
  app.add_option("--lamb-shift", raw.lamb_shift, "Lamb shift")->capture_default_str();
  app.add_option("--interaction", raw.interaction, "Dipole-dipole coupling")->capture_default_str();
  app.add_option("--t-max", raw.t_max, "Integration horizon (default 30/gamma)");
  app.add_option("--dt", raw.dt, "RK4 step (default 0.005/gamma)");
  app.add_option("--dissipation", raw.dissipation, "collective or independent")
      ->check(CLI::IsMember({"collective", "independent"}))
      ->capture_default_str();
  app.add_option("--grid", raw.grid, "min:max[:steps] or comma-separated list");
  app.add_option("--populations", raw.populations,
                 "Initial Bell populations p0,p+,p-,p1 (evolve)");
  app.add_option("--every", raw.every, "Keep every n-th trajectory sample")->capture_default_str();
  app.add_option("--output,-o", raw.output, "Output CSV path (default stdout)");

  bool numeric = false;
  auto* steady = app.add_subcommand("steady-state", "Closed-form steady state and observables");
  steady->fallthrough();
  steady->add_flag("--numeric", numeric, "Also solve the Liouvillian kernel and report the distance");

  auto* evolve_cmd = app.add_subcommand("evolve", "Integrate the master equation");
  evolve_cmd->fallthrough();

  std::string axis;
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter over a grid");
  sweep->fallthrough();
  sweep->add_option("--axis", axis, "beta0, betaB or r")
      ->required()
      ->check(CLI::IsMember({"beta0", "betaB", "r", "sweep-beta0", "sweep-betaB", "sweep-r"}));

  std::string preset;
  bool list = false;
  auto* figure = app.add_subcommand("figure", "Run a figure preset");
  figure->fallthrough();
  figure->add_option("name", preset, "Preset name");
  figure->add_flag("--list", list, "List preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*steady) run_steady_state(raw, numeric);
    else if (*evolve_cmd) run_evolve_command(raw);
    else if (*sweep) run_sweep_command(raw, axis);
    else if (*figure) run_figure_command(raw, preset, list);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
