#include "pairdiss/thermo.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pairdiss/error.hpp"

namespace pairdiss {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Entropy of the normalized ladder weights (1, e^{-x}, e^{-2x}) / Z+,
// equal to ln Z+ + x <k>.
double ladder_entropy(double omega_beta) {
  double s = 0.0;
  for (double w : ladder_weights(omega_beta)) s += entropy_term(w);
  return s;
}

double require_finite_nonzero(double omega_beta) {
  if (!std::isfinite(omega_beta) || omega_beta == 0.0)
    throw Error(ErrorCode::InvalidArgument, "omega*beta_B must be finite and nonzero");
  return omega_beta;
}

}  // namespace

SteadyStateParams::SteadyStateParams(double omega_beta_bath, double r)
    : omega_beta_bath_(omega_beta_bath), r_(r) {
  if (std::isnan(omega_beta_bath)) throw Error(ErrorCode::InvalidArgument, "omega*beta_B is NaN");
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in [0, 1]");
}

PartitionFunctions partition_functions(double omega_beta) {
  if (std::isnan(omega_beta)) throw Error(ErrorCode::InvalidArgument, "omega*beta is NaN");
  const double x = std::exp(-omega_beta);
  PartitionFunctions pf{};
  pf.z_full = 1.0 + 2.0 * x + x * x;
  pf.z_plus = 1.0 + x + x * x;
  if (omega_beta >= 0.0) {
    pf.ratio = pf.z_plus / pf.z_full;
  } else {
    const double y = std::exp(omega_beta);
    pf.ratio = (y * y + y + 1.0) / ((y + 1.0) * (y + 1.0));
  }
  return pf;
}

double r_from_initial_beta(double omega_beta0) { return partition_functions(omega_beta0).ratio; }

double coherence_sum(const SteadyStateParams& p) {
  return p.r() / partition_functions(p.omega_beta_bath()).ratio - 1.0;
}

double coherence_l1(const SteadyStateParams& p) { return std::abs(coherence_sum(p)); }

double energy_th(double omega_beta_bath) { return 2.0 * excited_probability(omega_beta_bath); }

double energy_ss(const SteadyStateParams& p) {
  const auto w = ladder_weights(p.omega_beta_bath());
  return p.r() * (w[1] + 2.0 * w[2]) + (1.0 - p.r());
}

double energy_ss_coherence_form(const SteadyStateParams& p) {
  const double x = p.omega_beta_bath();
  return energy_th(x) - std::tanh(0.5 * x) * coherence_sum(p);
}

double energy_limit_cold_init(double omega_beta_bath) {
  const double x = omega_beta_bath;
  return energy_th(x) - std::tanh(0.5 * x) * ladder_weights(x)[1];
}

double energy_limit_hot_init(double omega_beta_bath) {
  const double x = omega_beta_bath;
  const double z = partition_functions(x).ratio;
  return energy_th(x) - std::tanh(0.5 * x) * (0.75 / z - 1.0);
}

double entropy_th(double omega_beta_bath) {
  const double pe = excited_probability(omega_beta_bath);
  const double pg = 1.0 / (1.0 + std::exp(-omega_beta_bath));
  return 2.0 * (entropy_term(pe) + entropy_term(pg));
}

double entropy_ss(const SteadyStateParams& p) {
  const double r = p.r();
  return entropy_term(r) + entropy_term(1.0 - r) + r * ladder_entropy(p.omega_beta_bath());
}

double entropy_ss_coherence_form(const SteadyStateParams& p) {
  const double x = p.omega_beta_bath();
  if (!std::isfinite(x))
    throw Error(ErrorCode::InvalidArgument, "coherence form needs a finite omega*beta_B");
  const double r = p.r();
  const double c = coherence_sum(p);
  const double ex_zplus = std::exp(x) + 1.0 + std::exp(-x);
  const double dark = r == 1.0 ? 0.0 : (1.0 - r) * std::log(1.0 - ex_zplus * c);
  const double bright = r == 0.0 ? 0.0 : r * std::log(1.0 + c);
  return entropy_th(x) - dark - bright - x * std::tanh(0.5 * x) * c;
}

double entropy_ss_slope(const SteadyStateParams& p) {
  const double r = p.r();
  if (r == 0.0) return kInf;
  if (r == 1.0) return -kInf;
  return std::log(1.0 / r - 1.0) + ladder_entropy(p.omega_beta_bath());
}

namespace {

std::optional<double> log_ratio(double numerator, double denominator) {
  if (numerator <= 0.0 && denominator <= 0.0) return std::nullopt;
  if (denominator <= 0.0) return kInf;
  if (numerator <= 0.0) return -kInf;
  return std::log(numerator / denominator);
}

}  // namespace

std::optional<double> apparent_temperature(const DensityMatrix& rho) {
  // Below this the trace is indistinguishable from round-off on a 4x4 state.
  constexpr double kZero = 1e-14;
  const auto s = collective_ladder_ops();
  const Matrix4c m = rho.pair();
  double absorb = (s.lower * s.raise * m).trace().real();
  double emit = (s.raise * s.lower * m).trace().real();
  if (absorb < kZero) absorb = 0.0;
  if (emit < kZero) emit = 0.0;
  return log_ratio(absorb, emit);
}

std::optional<double> apparent_temperature(const BellPopulations& pops) {
  return log_ratio(pops.p0 + pops.pplus, pops.p1 + pops.pplus);
}

double heat_flow_rate(const BellPopulations& pops, const BathSpec& bath) {
  const auto [down, up] = bath.rates();
  return 4.0 * (up * (pops.p0 + pops.pplus) - down * (pops.p1 + pops.pplus));
}

double heat_flow_rate_apparent_form(const BellPopulations& pops, const BathSpec& bath) {
  const double x = bath.omega_beta_bath();
  if (!std::isfinite(x))
    throw Error(ErrorCode::InvalidArgument, "apparent form needs a finite omega*beta_B");
  const double up = bath.rates().up;
  const double upper = pops.p1 + pops.pplus;
  if (upper <= 0.0) return 4.0 * up * (pops.p0 + pops.pplus);
  const double boltzmann_ratio = (pops.p0 + pops.pplus) / upper;
  return 4.0 * up * upper * (boltzmann_ratio - std::exp(x));
}

double local_inverse_temperature(const SteadyStateParams& p) {
  const auto pops = steady_state_populations(p.omega_beta_bath(), p.r());
  const double shared = 0.5 * (pops.pplus + pops.pminus);
  const double excited = pops.p1 + shared;
  const double ground = pops.p0 + shared;
  if (excited <= 0.0) return kInf;
  if (ground <= 0.0) return -kInf;
  return std::log(ground / excited);
}

EntropyCriticalPoint entropy_critical_r(double omega_beta_bath) {
  const double x = require_finite_nonzero(omega_beta_bath);
  const auto w = ladder_weights(x);
  const double omega_star = w[1] + 2.0 * w[2];
  // dS/dr = ln(1/r - 1) + S3 vanishes at r = 1 / (1 + e^{-S3}); this is the
  // same point as z / (1 + (e^{-omega* x} - e^{-x}) / Z) without overflow.
  const double r_cr = 1.0 / (1.0 + std::exp(-ladder_entropy(x)));
  return {r_cr, omega_star};
}

EntropyCrossing entropy_crossing_r_star(double omega_beta_bath) {
  const double x = require_finite_nonzero(omega_beta_bath);
  const double target = entropy_th(x);
  auto excess = [&](double r) { return entropy_ss(SteadyStateParams(x, r)) - target; };

  double lo = 1e-15;
  double hi = entropy_critical_r(x).r_cr;
  if (!(excess(lo) < 0.0 && excess(hi) >= 0.0))
    throw Error(ErrorCode::InvalidState,
                "entropy crossing not bracketed for omega*beta_B=" + std::to_string(x));
  while (hi - lo >= 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  const double r_star = 0.5 * (lo + hi);
  return {r_star, r_star / partition_functions(x).ratio - 1.0};
}

ObservableReport observe(const SteadyStateParams& p) {
  const double x = p.omega_beta_bath();
  ObservableReport rep{};
  rep.energy_ss = energy_ss(p);
  rep.energy_th = energy_th(x);
  rep.entropy_ss = entropy_ss(p);
  rep.entropy_th = entropy_th(x);
  rep.coherence_c = coherence_sum(p);
  rep.coherence_l1 = std::abs(rep.coherence_c);
  rep.apparent_temp_inverse = apparent_temperature(steady_state_populations(x, p.r()));
  rep.local_beta = local_inverse_temperature(p);
  return rep;
}

}  // namespace pairdiss
