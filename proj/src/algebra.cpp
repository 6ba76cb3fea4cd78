#include "pairdiss/algebra.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pairdiss/error.hpp"

namespace pairdiss {

namespace {

void require_finite_or_inf(double omega_beta) {
  if (std::isnan(omega_beta)) throw Error(ErrorCode::InvalidArgument, "omega*beta is NaN");
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4))
    throw Error(ErrorCode::InvalidState, "density matrix must be 2x2 or 4x4");
  if (!m_.allFinite()) throw Error(ErrorCode::InvalidState, "density matrix has non-finite entries");

  const double herm = hermiticity_defect(m_);
  if (herm > tolerance::hermitian)
    throw Error(ErrorCode::InvalidState,
                "density matrix not Hermitian (defect " + std::to_string(herm) + ")");
  const cplx tr = m_.trace();
  if (std::abs(tr - 1.0) > tolerance::trace)
    throw Error(ErrorCode::InvalidState,
                "density matrix trace " + std::to_string(tr.real()) + " != 1");
  const double lowest = hermitian_eigenvalues(m_).minCoeff();
  if (lowest < tolerance::positivity)
    throw Error(ErrorCode::InvalidState,
                "density matrix not positive (eigenvalue " + std::to_string(lowest) + ")");
}

DensityMatrix DensityMatrix::cleaned(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  const double tr = h.trace().real();
  if (!(tr > 0.0)) throw Error(ErrorCode::InvalidState, "cannot normalize a traceless matrix");
  h /= tr;
  return DensityMatrix(std::move(h));
}

Matrix4c DensityMatrix::pair() const {
  if (dim() != 4) throw Error(ErrorCode::InvalidArgument, "expected a two-qubit (4x4) state");
  return m_;
}

Eigen::VectorXd DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(m_); }

BellPopulations BellPopulations::make(double p0, double pplus, double pminus, double p1) {
  const double upper = 1.0 + tolerance::population_sum;
  for (double p : {p0, pplus, pminus, p1}) {
    if (!(p >= -tolerance::population_sum && p <= upper))
      throw Error(ErrorCode::InvalidState, "Bell population outside [0, 1]: " + std::to_string(p));
  }
  const double sum = p0 + pplus + pminus + p1;
  if (std::abs(sum - 1.0) > tolerance::population_sum)
    throw Error(ErrorCode::InvalidState, "Bell populations sum to " + std::to_string(sum));
  return BellPopulations{p0, pplus, pminus, p1, p0 + pplus + p1};
}

const std::array<Vector4c, 4>& bell_basis() {
  static const std::array<Vector4c, 4> basis = [] {
    const double s = 1.0 / std::sqrt(2.0);
    std::array<Vector4c, 4> b;
    b[0] << 1, 0, 0, 0;
    b[1] << 0, s, s, 0;
    b[2] << 0, s, -s, 0;
    b[3] << 0, 0, 0, 1;
    return b;
  }();
  return basis;
}

const Matrix4c& bell_unitary() {
  static const Matrix4c u = [] {
    Matrix4c m;
    for (int k = 0; k < 4; ++k) m.col(k) = bell_basis()[k];
    return m;
  }();
  return u;
}

Matrix4c to_bell_frame(const Matrix4c& product_frame) {
  return bell_unitary().adjoint() * product_frame * bell_unitary();
}

Matrix4c to_product_frame(const Matrix4c& bell_frame) {
  return bell_unitary() * bell_frame * bell_unitary().adjoint();
}

DensityMatrix from_bell_populations(const BellPopulations& pops) {
  Matrix4c d = Matrix4c::Zero();
  d(0, 0) = pops.p0;
  d(1, 1) = pops.pplus;
  d(2, 2) = pops.pminus;
  d(3, 3) = pops.p1;
  return DensityMatrix(to_product_frame(d));
}

LadderPair site_ladder_ops(int site) {
  if (site != 1 && site != 2) throw Error(ErrorCode::InvalidArgument, "site must be 1 or 2");
  // sigma^+ = |1><0| on the chosen qubit, identity on the other.
  Matrix2c up = Matrix2c::Zero();
  up(1, 0) = 1.0;
  const Matrix2c id = Matrix2c::Identity();
  const Matrix2c& a = site == 1 ? up : id;
  const Matrix2c& b = site == 1 ? id : up;
  Matrix4c raise;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) raise(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return {raise, raise.adjoint()};
}

LadderPair collective_ladder_ops() {
  const auto s1 = site_ladder_ops(1);
  const auto s2 = site_ladder_ops(2);
  const Matrix4c raise = s1.raise + s2.raise;
  return {raise, raise.adjoint()};
}

Matrix4c free_hamiltonian(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw Error(ErrorCode::InvalidArgument, "omega must be positive and finite");
  Matrix4c h = Matrix4c::Zero();
  h(1, 1) = omega;
  h(2, 2) = omega;
  h(3, 3) = 2.0 * omega;
  return h;
}

double excited_probability(double omega_beta) {
  require_finite_or_inf(omega_beta);
  return 1.0 / (1.0 + std::exp(omega_beta));
}

std::array<double, 3> ladder_weights(double omega_beta) {
  require_finite_or_inf(omega_beta);
  if (omega_beta >= 0.0) {
    const double x = std::exp(-omega_beta);
    const double norm = 1.0 + x + x * x;
    return {1.0 / norm, x / norm, x * x / norm};
  }
  const double y = std::exp(omega_beta);
  const double norm = y * y + y + 1.0;
  return {y * y / norm, y / norm, 1.0 / norm};
}

DensityMatrix thermal_state(double omega_beta) {
  const double pe = excited_probability(omega_beta);
  const double pg = 1.0 / (1.0 + std::exp(-omega_beta));
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = pg * pg;
  m(1, 1) = pg * pe;
  m(2, 2) = pg * pe;
  m(3, 3) = pe * pe;
  return DensityMatrix(m);
}

BellPopulations to_bell_populations(const DensityMatrix& rho) {
  const Matrix4c bell = to_bell_frame(rho.pair());
  std::array<double, 4> p{};
  for (int k = 0; k < 4; ++k) {
    p[k] = bell(k, k).real();
    if (p[k] < 0.0 && p[k] >= tolerance::positivity) p[k] = 0.0;
  }
  return BellPopulations::make(p[0], p[1], p[2], p[3]);
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
  if (keep != 1 && keep != 2) throw Error(ErrorCode::InvalidArgument, "subsystem must be 1 or 2");
  const Matrix4c m = rho.pair();
  Matrix2c reduced = Matrix2c::Zero();
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int t = 0; t < 2; ++t)
        reduced(a, ap) += keep == 1 ? m(2 * a + t, 2 * ap + t) : m(2 * t + a, 2 * t + ap);
  return DensityMatrix(reduced);
}

double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues()) s += entropy_term(lambda);
  return s;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  return 0.5 * hermitian_eigenvalues(a.matrix() - b.matrix()).cwiseAbs().sum();
}

}  // namespace pairdiss
