#pragma once

// Small dense complex linear algebra for a pair of two-level systems.
//
// Product basis ordering is {|00>, |01>, |10>, |11>} with |0> the ground
// state, i.e. index = 2*q1 + q2. Energies are in units of the transition
// frequency omega, so temperatures enter only as the dimensionless product
// omega*beta. Those arguments are extended reals: +-infinity is accepted and
// resolved by its analytic limit.

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace pairdiss {

using cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;
using ComplexMatrix = Eigen::MatrixXcd;

namespace tolerance {
inline constexpr double hermitian = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double positivity = -1e-10;
inline constexpr double population_sum = 1e-12;
}  // namespace tolerance

/// max_ij |A_ij - conj(A_ji)|.
double hermiticity_defect(const ComplexMatrix& a);

/// A 2x2 or 4x4 density matrix. Construction validates Hermiticity, unit
/// trace and positivity (eigenvalues >= -1e-10) and throws
/// Error{InvalidState} otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  /// Re-Hermitizes and renormalizes the trace before validating.
  static DensityMatrix cleaned(const ComplexMatrix& m);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }

  /// The 4x4 matrix; throws for a reduced (2x2) state.
  Matrix4c pair() const;

  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;

 private:
  ComplexMatrix m_;
};

/// Populations in the symmetric/antisymmetric basis and the conserved
/// weight r = p0 + pplus + p1 outside the dark state.
struct BellPopulations {
  double p0 = 1.0;
  double pplus = 0.0;
  double pminus = 0.0;
  double p1 = 0.0;
  double r = 1.0;

  /// Validates ranges and normalization, and fills r.
  static BellPopulations make(double p0, double pplus, double pminus, double p1);
};

enum class BellIndex : int { Ground = 0, Plus = 1, Minus = 2, Excited = 3 };

/// |psi0>=|00>, |psi+>, |psi->, |psi1>=|11>, in that order.
const std::array<Vector4c, 4>& bell_basis();

/// Unitary whose columns are bell_basis(); rho_bell = U^dag rho U.
const Matrix4c& bell_unitary();

Matrix4c to_bell_frame(const Matrix4c& product_frame);
Matrix4c to_product_frame(const Matrix4c& bell_frame);

/// Bell-diagonal state with the given populations.
DensityMatrix from_bell_populations(const BellPopulations& pops);

struct LadderPair {
  Matrix4c raise;
  Matrix4c lower;
};

/// sigma_i^+ (raise) and sigma_i^- (lower) of qubit `site` in {1, 2}.
LadderPair site_ladder_ops(int site);

/// S^+ = sigma_1^+ + sigma_2^+ and its adjoint S^-.
LadderPair collective_ladder_ops();

/// H0 = omega (n1 + n2) = diag(0, omega, omega, 2 omega).
Matrix4c free_hamiltonian(double omega);

/// Excitation probability of one qubit at inverse temperature omega*beta,
/// 1 / (1 + e^{omega beta}).
double excited_probability(double omega_beta);

/// Normalized weights (1, e^{-x}, e^{-2x}) / (1 + e^{-x} + e^{-2x}) of the
/// three collectively coupled levels psi0, psi+, psi1, with x = omega*beta.
std::array<double, 3> ladder_weights(double omega_beta);

/// Boltzmann state of the pair, e^{-beta H0}/Z.
DensityMatrix thermal_state(double omega_beta);

BellPopulations to_bell_populations(const DensityMatrix& rho);

/// Reduced state of qubit `keep` in {1, 2}.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

/// -sum lambda ln lambda in nats, with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Half the trace norm of the difference.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// -p ln p with the 0 ln 0 = 0 convention.
double entropy_term(double p);

}  // namespace pairdiss
