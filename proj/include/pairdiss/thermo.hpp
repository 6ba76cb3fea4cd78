#pragma once

// Closed-form thermodynamics of the collective steady state
//   rho_ss(beta_B, r) = (1-r)|psi-><psi-| + r e^{-beta_B H0} P_bright / Z+.
// Energies are in units of omega, entropies in nats, inverse temperatures
// as the dimensionless omega*beta.

#include <optional>

#include "pairdiss/algebra.hpp"
#include "pairdiss/dynamics.hpp"

namespace pairdiss {

class SteadyStateParams {
 public:
  /// Throws Error{InvalidArgument} unless r is in [0, 1] and omega*beta_B
  /// is not NaN.
  SteadyStateParams(double omega_beta_bath, double r);

  double omega_beta_bath() const noexcept { return omega_beta_bath_; }
  double r() const noexcept { return r_; }

 private:
  double omega_beta_bath_;
  double r_;
};

struct PartitionFunctions {
  double z_full;  ///< Z = 1 + 2 e^{-x} + e^{-2x}
  double z_plus;  ///< Z+ = 1 + e^{-x} + e^{-2x}
  double ratio;   ///< z = Z+ / Z, in [3/4, 1]
};

PartitionFunctions partition_functions(double omega_beta);

/// r reached from the thermal initial state at omega*beta_0, i.e. z(beta_0).
double r_from_initial_beta(double omega_beta0);

/// Sum of the two |01>,|10> coherences, c = r / z(beta_B) - 1, in [-1, 1/3].
double coherence_sum(const SteadyStateParams& p);
double coherence_l1(const SteadyStateParams& p);

double energy_th(double omega_beta_bath);
double energy_ss(const SteadyStateParams& p);
/// E_th - tanh(x/2) c. Same value as energy_ss, written through the coherence.
double energy_ss_coherence_form(const SteadyStateParams& p);

/// Lowest steady energy for beta_B > 0, reached from |beta_0| -> infinity (r = 1).
double energy_limit_cold_init(double omega_beta_bath);
/// Highest steady energy for beta_B > 0, reached from beta_0 = 0 (r = 3/4).
double energy_limit_hot_init(double omega_beta_bath);

double entropy_th(double omega_beta_bath);
double entropy_ss(const SteadyStateParams& p);
/// S_th - (1-r) ln[1 - e^x Z+ c] - r ln(1+c) - x tanh(x/2) c. Requires a
/// finite omega*beta_B.
double entropy_ss_coherence_form(const SteadyStateParams& p);
/// dS_ss/dr = ln(1/r - 1) + ln Z+ + x (e^{-x} + 2e^{-2x}) / Z+.
double entropy_ss_slope(const SteadyStateParams& p);

/// Inverse apparent temperature omega/T = ln(Tr S-S+ rho / Tr S+S- rho).
/// Empty when both traces vanish (the dark state); +-infinity when only one
/// does.
std::optional<double> apparent_temperature(const DensityMatrix& rho);
std::optional<double> apparent_temperature(const BellPopulations& pops);

/// dE/dt = 4 [G_up (p0 + p+) - G_down (p1 + p+)] in units of omega * rate.
double heat_flow_rate(const BellPopulations& pops, const BathSpec& bath);
/// 4 G_up (p1 + p+) [e^{omega/T} - e^{omega beta_B}]; finite beta_B only.
double heat_flow_rate_apparent_form(const BellPopulations& pops, const BathSpec& bath);

/// omega*beta_Loc of either qubit in the steady state. +inf when the local
/// excited population vanishes.
double local_inverse_temperature(const SteadyStateParams& p);

struct EntropyCriticalPoint {
  double r_cr;
  double omega_star;  ///< in units of omega
};

/// Maximizer of S_ss over r. omega*beta_B must be finite and nonzero.
EntropyCriticalPoint entropy_critical_r(double omega_beta_bath);

struct EntropyCrossing {
  double r_star;
  double c_star;
};

/// The r in (0, r_cr] where S_ss = S_th, by bisection to 1e-12.
EntropyCrossing entropy_crossing_r_star(double omega_beta_bath);

struct ObservableReport {
  double energy_ss;
  double energy_th;
  double entropy_ss;
  double entropy_th;
  double coherence_c;
  double coherence_l1;
  std::optional<double> apparent_temp_inverse;
  double local_beta;
};

ObservableReport observe(const SteadyStateParams& p);

}  // namespace pairdiss
