#pragma once

// Lindblad generators for a pair of two-level systems coupled to a common
// (collective) or to separate (independent) thermal baths, fixed-step RK4
// propagation, and numeric/closed-form steady states.
//
// Superoperators act on the column-stacked vectorization of a 4x4 density
// matrix: vec(rho)[4*col + row] = rho(row, col).

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "pairdiss/algebra.hpp"

namespace pairdiss {

using Matrix16c = Eigen::Matrix<cplx, 16, 16>;
using Vector16c = Eigen::Matrix<cplx, 16, 1>;

struct Rates {
  double down = 0.0;  ///< emission, G(omega)
  double up = 0.0;    ///< absorption, G(-omega)
};

/// Splits the total rate gamma so that down + up = gamma and
/// down / up = e^{omega beta_B}. Valid for negative and infinite omega*beta.
Rates rates_from_beta(double gamma, double omega_beta_bath);

/// Bath parameters in units of omega.
class BathSpec {
 public:
  BathSpec(double gamma, double omega_beta_bath, double lamb_shift = 0.0,
           double interaction = 0.0);

  double gamma() const noexcept { return gamma_; }
  double omega_beta_bath() const noexcept { return omega_beta_bath_; }
  double lamb_shift() const noexcept { return lamb_shift_; }
  double interaction() const noexcept { return interaction_; }
  Rates rates() const noexcept { return rates_; }

 private:
  double gamma_;
  double omega_beta_bath_;
  double lamb_shift_;
  double interaction_;
  Rates rates_;
};

Vector16c vectorize(const Matrix4c& rho);
Matrix4c unvectorize(const Vector16c& v);

class Superoperator {
 public:
  explicit Superoperator(const Matrix16c& m) : m_(m) {}

  const Matrix16c& matrix() const noexcept { return m_; }
  Matrix4c apply(const Matrix4c& rho) const { return unvectorize(m_ * vectorize(rho)); }
  Matrix4c apply(const DensityMatrix& rho) const { return apply(rho.pair()); }

 private:
  Matrix16c m_;
};

/// Generator of -i[H, .] + sum_k rate_k (2 J_k . J_k^dag - {J_k^dag J_k, .}).
Superoperator lindblad_generator(const Matrix4c& hamiltonian,
                                 const std::vector<std::pair<double, Matrix4c>>& jumps);

/// Each qubit dissipates into its own bath.
Superoperator liouvillian_independent(const BathSpec& bath);

/// Both qubits couple through S^+- to one bath; includes the exchange term
/// Omega_I (sigma_1^+ sigma_2^- + h.c.).
Superoperator liouvillian_collective(const BathSpec& bath);

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;

  const DensityMatrix& final_state() const { return states.back(); }
};

/// Classic fixed-step RK4 on vec(rho). The step is shrunk to t_max / n with
/// n = ceil(t_max / dt) so the last sample lands on t_max. Every step is
/// re-Hermitized and trace-renormalized; trace drift above 1e-6 within a
/// step throws Error{IntegratorUnstable}. Keep dt <= 0.01 / gamma.
Trajectory evolve(const DensityMatrix& rho0, const Superoperator& generator, double t_max,
                  double dt, std::size_t store_every = 1);

/// Kernel of the generator with Tr rho = 1. When the kernel is two
/// dimensional (collective dissipation) the dark-state weight is fixed by
/// p0 + p+ + p1 = r, defaulting to r = 1. Passing r for a generator with a
/// unique fixed point is only consistent if that point has the same r.
DensityMatrix steady_state_numeric(const Superoperator& generator,
                                   std::optional<double> r = std::nullopt);

/// Bell-basis populations of the collective steady state.
BellPopulations steady_state_populations(double omega_beta_bath, double r);

/// (1-r)|psi-><psi-| + r (|psi0><psi0| + e^{-x}|psi+><psi+| + e^{-2x}|psi1><psi1|) / Z+.
DensityMatrix steady_state_analytic(double omega_beta_bath, double r);

/// Eigenvalues (a+, a-) of the reduced (p0, p+) population system.
std::pair<double, double> population_eigenvalues(const Rates& rates);

/// 10 / |a+|, the time after which the slowest population mode has decayed
/// by e^{-10}.
double relaxation_time(const BathSpec& bath);

/// Exact Bell populations at time t under collective dissipation. Falls
/// back to RK4 when either rate vanishes (the normal-mode map degenerates).
BellPopulations population_dynamics_closed_form(const BellPopulations& initial,
                                                const BathSpec& bath, double t);

struct CoherenceRates {
  cplx plus_minus;     ///< rho_{+,-}
  cplx excited_minus;  ///< rho_{1,-}
  cplx ground_minus;   ///< rho_{0,-}
  cplx excited_ground; ///< rho_{1,0}
  /// d/dt (rho_{1,+}, rho_{+,0}) = block * (rho_{1,+}, rho_{+,0}).
  Matrix2c coupled_block;
  std::array<cplx, 2> coupled_eigenvalues;

  double max_real_part() const;
};

/// Decay generators of the Bell-basis coherences, d/dt rho_ij = rate * rho_ij.
CoherenceRates coherence_decay_rates(const BathSpec& bath);

/// d^2 / (4 pi eps0 r^3) (1 - 3 cos^2 theta), the dipole-dipole exchange
/// strength between two confined atoms with parallel polarization.
double vdw_interaction_strength(double dipole, double separation, double cos_angle,
                                double permittivity);

/// Bell-basis element <psi_i| rho |psi_j>.
cplx bell_element(const DensityMatrix& rho, BellIndex i, BellIndex j);

/// Columns: t, p0, p_plus, p_minus, p1, then re/im of the coherences
/// (+,-), (1,-), (0,-), (1,0), (1,+), (+,0).
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

}  // namespace pairdiss
