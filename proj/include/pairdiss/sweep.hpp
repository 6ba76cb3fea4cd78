#pragma once

// Declarative parameter sweeps over the closed-form steady-state observables,
// figure presets, trajectory runs, and their CSV output.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pairdiss/algebra.hpp"
#include "pairdiss/dynamics.hpp"
#include "pairdiss/thermo.hpp"

namespace pairdiss {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kDefaultGridSteps = 201;

enum class SweepMode { Beta0, BetaBath, R, Evolve };

std::string_view to_string(SweepMode mode);
/// Accepts "sweep-beta0"/"beta0", "sweep-betaB"/"betaB", "sweep-r"/"r", "evolve".
SweepMode parse_sweep_mode(std::string_view text);

enum class Dissipation { Collective, Independent };

std::string_view to_string(Dissipation d);
Dissipation parse_dissipation(std::string_view text);

struct Grid {
  double min = 0.0;
  double max = 1.0;
  int steps = kDefaultGridSteps;
  /// Explicit points; when non-empty the range fields are ignored.
  std::vector<double> values;

  /// "min:max:steps", "min:max" (default steps) or a comma-separated list.
  /// List entries may be inf / -inf.
  static Grid parse(std::string_view spec);
  static Grid range(double min, double max, int steps = kDefaultGridSteps);

  void validate() const;
  std::vector<double> points() const;
  std::string describe() const;
};

struct FixedParams {
  std::optional<double> omega_beta_bath;
  std::optional<double> omega_beta0;
  std::optional<double> r;
  double gamma = 1.0;
  double lamb_shift = 0.0;
  double interaction = 0.0;
  std::optional<double> t_max;
  std::optional<double> dt;
  Dissipation dissipation = Dissipation::Collective;
  std::optional<BellPopulations> initial_populations;
  std::size_t sample_every = 1;
};

struct SweepConfig {
  SweepMode mode = SweepMode::Beta0;
  Grid grid;
  FixedParams fixed;
  std::string output_path;  ///< empty means standard output
  std::string preset;
  /// Adds r_cr, r* and z(beta_B) reference lines (r sweeps only).
  bool reference_rows = false;

  void validate() const;
};

struct SweepRow {
  double swept;
  double r;
  double c;
  double e_ss;
  double e_th;
  double e_ratio;
  double s_ss;
  double s_th;
  double s_ratio;
  double omega_beta_loc;
  std::optional<double> omega_over_apparent_t;
};

SweepRow compute_row(const SweepConfig& config, double swept_value);

/// One row per grid point, in grid order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// '#' preamble (version and full config), header, rows.
void write_sweep_csv(std::ostream& out, const SweepConfig& config,
                     const std::vector<SweepRow>& rows);

const std::vector<std::string>& figure_preset_names();
SweepConfig figure_preset(std::string_view name);

struct EvolveSummary {
  double t_final;
  double trace_distance_to_fixed_point;
  double energy;
  double entropy;
  double r;
  double coherence_c;
  std::optional<double> omega_over_apparent_t;
};

/// Integrates the configured dynamics and writes the trajectory CSV followed
/// by a '# final,...' report line.
EvolveSummary run_evolve(const SweepConfig& config, std::ostream& out);

/// Preamble lines without the leading "# ".
std::vector<std::string> describe(const SweepConfig& config);

}  // namespace pairdiss
