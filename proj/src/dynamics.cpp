#include "pairdiss/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "pairdiss/error.hpp"
#include "pairdiss/format.hpp"

namespace pairdiss {

namespace {

Matrix16c kron(const Matrix4c& a, const Matrix4c& b) {
  Matrix16c out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

Matrix4c number_operator() {
  const auto s1 = site_ladder_ops(1);
  const auto s2 = site_ladder_ops(2);
  return s1.raise * s1.lower + s2.raise * s2.lower;
}

double require_r(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in [0, 1]");
  return r;
}

}  // namespace

Rates rates_from_beta(double gamma, double omega_beta_bath) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw Error(ErrorCode::InvalidArgument, "gamma must be positive and finite");
  if (std::isnan(omega_beta_bath))
    throw Error(ErrorCode::InvalidArgument, "omega*beta_B is NaN");
  return {gamma / (1.0 + std::exp(-omega_beta_bath)), gamma / (1.0 + std::exp(omega_beta_bath))};
}

BathSpec::BathSpec(double gamma, double omega_beta_bath, double lamb_shift, double interaction)
    : gamma_(gamma),
      omega_beta_bath_(omega_beta_bath),
      lamb_shift_(lamb_shift),
      interaction_(interaction),
      rates_(rates_from_beta(gamma, omega_beta_bath)) {
  if (!std::isfinite(lamb_shift) || !std::isfinite(interaction))
    throw Error(ErrorCode::InvalidArgument, "Lamb shift and interaction must be finite");
}

Vector16c vectorize(const Matrix4c& rho) {
  Vector16c v;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) v(4 * col + row) = rho(row, col);
  return v;
}

Matrix4c unvectorize(const Vector16c& v) {
  Matrix4c m;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) m(row, col) = v(4 * col + row);
  return m;
}

Superoperator lindblad_generator(const Matrix4c& hamiltonian,
                                 const std::vector<std::pair<double, Matrix4c>>& jumps) {
  const Matrix4c id = Matrix4c::Identity();
  const cplx i{0.0, 1.0};
  // vec(A X B) = (B^T kron A) vec(X)
  Matrix16c l = -i * (kron(id, hamiltonian) - kron(hamiltonian.transpose(), id));
  for (const auto& [rate, jump] : jumps) {
    if (rate == 0.0) continue;
    const Matrix4c jdj = jump.adjoint() * jump;
    l += rate * (2.0 * kron(jump.conjugate(), jump) - kron(id, jdj) - kron(jdj.transpose(), id));
  }
  return Superoperator(l);
}

Superoperator liouvillian_independent(const BathSpec& bath) {
  const auto [down, up] = bath.rates();
  const auto s1 = site_ladder_ops(1);
  const auto s2 = site_ladder_ops(2);
  return lindblad_generator(bath.lamb_shift() * number_operator(),
                            {{down, s1.lower}, {down, s2.lower}, {up, s1.raise}, {up, s2.raise}});
}

Superoperator liouvillian_collective(const BathSpec& bath) {
  const auto [down, up] = bath.rates();
  const auto s1 = site_ladder_ops(1);
  const auto s2 = site_ladder_ops(2);
  const auto collective = collective_ladder_ops();
  const Matrix4c exchange = s1.raise * s2.lower + s1.lower * s2.raise;
  const Matrix4c h = bath.lamb_shift() * number_operator() + bath.interaction() * exchange;
  return lindblad_generator(h, {{down, collective.lower}, {up, collective.raise}});
}

Trajectory evolve(const DensityMatrix& rho0, const Superoperator& generator, double t_max,
                  double dt, std::size_t store_every) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw Error(ErrorCode::InvalidArgument, "dt must be positive and finite");
  if (!(t_max >= dt) || !std::isfinite(t_max))
    throw Error(ErrorCode::InvalidArgument, "t_max must be finite and at least dt");
  if (store_every == 0) throw Error(ErrorCode::InvalidArgument, "store_every must be >= 1");

  const auto steps = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-9));
  const double h = t_max / static_cast<double>(steps);
  const Matrix16c& l = generator.matrix();

  Trajectory traj;
  traj.times.reserve(steps / store_every + 2);
  traj.states.reserve(steps / store_every + 2);
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);

  Vector16c v = vectorize(rho0.pair());
  for (std::size_t n = 1; n <= steps; ++n) {
    const Vector16c k1 = l * v;
    const Vector16c k2 = l * (v + 0.5 * h * k1);
    const Vector16c k3 = l * (v + 0.5 * h * k2);
    const Vector16c k4 = l * (v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const Matrix4c raw = unvectorize(v);
    const double t = h * static_cast<double>(n);
    const double drift = std::abs(raw.trace() - 1.0);
    if (!raw.allFinite() || drift > 1e-6) {
      std::ostringstream msg;
      msg << "RK4 unstable at step " << n << " (t=" << t << ", dt=" << h
          << "): trace drift " << drift << "; reduce dt";
      throw Error(ErrorCode::IntegratorUnstable, msg.str());
    }
    const Matrix4c herm = 0.5 * (raw + raw.adjoint());
    const Matrix4c clean = herm / herm.trace().real();
    v = vectorize(clean);

    if (n % store_every == 0 || n == steps) {
      try {
        traj.states.emplace_back(clean);
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "RK4 left the state space at step " << n << " (t=" << t << "): " << e.what();
        throw Error(ErrorCode::IntegratorUnstable, msg.str());
      }
      traj.times.push_back(t);
    }
  }
  return traj;
}

DensityMatrix steady_state_numeric(const Superoperator& generator, std::optional<double> r) {
  using Dyn = Eigen::MatrixXcd;
  const Matrix16c& l = generator.matrix();
  if (r) require_r(*r);

  const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
  Eigen::CompleteOrthogonalDecomposition<Dyn> cod(Dyn(l / scale));
  cod.setThreshold(1e-10);
  const auto kernel_dim = 16 - cod.rank();
  if (kernel_dim < 1 || kernel_dim > 2)
    throw Error(ErrorCode::SingularSystem,
                "generator kernel has dimension " + std::to_string(kernel_dim));

  Eigen::Matrix<cplx, 1, 16> trace_row = Eigen::Matrix<cplx, 1, 16>::Zero();
  for (int k = 0; k < 4; ++k) trace_row(5 * k) = 1.0;

  // p0 + p+ + p1 = Tr(P rho) with P = 1 - |psi-><psi-|.
  const Matrix4c bright = Matrix4c::Identity() - bell_basis()[2] * bell_basis()[2].adjoint();
  Eigen::Matrix<cplx, 1, 16> r_row;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) r_row(4 * col + row) = bright(col, row);

  const bool use_r = r.has_value() || kernel_dim == 2;
  const double r_value = r.value_or(1.0);
  const int rows = 16 + 1 + (use_r ? 1 : 0);
  Dyn a(rows, 16);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(rows);
  a.topRows(16) = l / scale;
  a.row(16) = trace_row;
  b(16) = 1.0;
  if (use_r) {
    a.row(17) = r_row;
    b(17) = r_value;
  }

  const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
  const double residual = (a * x - b).norm();
  if (!x.allFinite() || residual > 1e-9) {
    std::ostringstream msg;
    msg << "steady-state system has no consistent solution (residual " << residual << ")";
    if (r && kernel_dim == 1) msg << "; r does not match the unique fixed point";
    throw Error(ErrorCode::SingularSystem, msg.str());
  }

  Vector16c v = x;
  const Matrix4c m = unvectorize(v);
  try {
    return DensityMatrix::cleaned(m);
  } catch (const Error& e) {
    throw Error(ErrorCode::NonPhysical, std::string("numeric steady state: ") + e.what());
  }
}

BellPopulations steady_state_populations(double omega_beta_bath, double r) {
  require_r(r);
  const auto w = ladder_weights(omega_beta_bath);
  return BellPopulations::make(r * w[0], r * w[1], 1.0 - r, r * w[2]);
}

DensityMatrix steady_state_analytic(double omega_beta_bath, double r) {
  return from_bell_populations(steady_state_populations(omega_beta_bath, r));
}

std::pair<double, double> population_eigenvalues(const Rates& rates) {
  const double g = std::sqrt(rates.down * rates.up);
  const double sum = rates.down + rates.up;
  return {4.0 * (g - sum), 4.0 * (-g - sum)};
}

double relaxation_time(const BathSpec& bath) {
  return 10.0 / std::abs(population_eigenvalues(bath.rates()).first);
}

BellPopulations population_dynamics_closed_form(const BellPopulations& initial,
                                                const BathSpec& bath, double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw Error(ErrorCode::InvalidArgument, "t must be finite and non-negative");
  const auto init = BellPopulations::make(initial.p0, initial.pplus, initial.pminus, initial.p1);
  if (t == 0.0) return init;

  const auto [down, up] = bath.rates();
  if (down == 0.0 || up == 0.0) {
    // q-map degenerate; integrate numerically instead.
    const double dt = std::min(0.001 / bath.gamma(), t);
    const auto traj = evolve(from_bell_populations(init), liouvillian_collective(bath), t, dt,
                             std::numeric_limits<std::size_t>::max());
    return to_bell_populations(traj.final_state());
  }

  const double s = std::sqrt(up / down);
  const double r = init.r;
  const auto [a_plus, a_minus] = population_eigenvalues(bath.rates());
  auto advance = [&](double q0, double a) {
    return std::exp(a * t) * q0 + 4.0 * down * r * std::expm1(a * t) / a;
  };
  const double q_plus = advance(init.pplus + (1.0 + s) * init.p0, a_plus);
  const double q_minus = advance(init.pplus + (1.0 - s) * init.p0, a_minus);

  auto snap = [](double p) { return (p < 0.0 && p > -1e-9) ? 0.0 : p; };
  const double p0 = snap((q_plus - q_minus) / (2.0 * s));
  const double pplus = snap(0.5 * (q_plus + q_minus) - p0);
  const double p1 = snap(r - p0 - pplus);
  return BellPopulations::make(p0, pplus, init.pminus, p1);
}

double CoherenceRates::max_real_part() const {
  double m = std::max({plus_minus.real(), excited_minus.real(), ground_minus.real(),
                       excited_ground.real()});
  for (const auto& e : coupled_eigenvalues) m = std::max(m, e.real());
  return m;
}

CoherenceRates coherence_decay_rates(const BathSpec& bath) {
  const auto [down, up] = bath.rates();
  const double lamb = bath.lamb_shift();
  const double inter = bath.interaction();
  const cplx i{0.0, 1.0};

  CoherenceRates c;
  c.plus_minus = -2.0 * (down + up) - 2.0 * i * inter;
  c.excited_minus = -2.0 * down - i * (lamb + inter);
  c.ground_minus = -2.0 * up - i * (inter - lamb);
  c.excited_ground = -2.0 * (down + up) - 2.0 * i * lamb;
  c.coupled_block << -2.0 * (2.0 * down + up) - i * (lamb - inter), 4.0 * up,
      4.0 * down, -2.0 * (down + 2.0 * up) - i * (lamb + inter);
  Eigen::ComplexEigenSolver<Matrix2c> solver(c.coupled_block, false);
  c.coupled_eigenvalues = {solver.eigenvalues()(0), solver.eigenvalues()(1)};
  return c;
}

double vdw_interaction_strength(double dipole, double separation, double cos_angle,
                                double permittivity) {
  if (!(separation > 0.0) || !std::isfinite(separation))
    throw Error(ErrorCode::InvalidArgument, "separation must be positive");
  if (!(std::abs(cos_angle) <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "|cos(theta)| must not exceed 1");
  if (!(permittivity > 0.0)) throw Error(ErrorCode::InvalidArgument, "permittivity must be positive");
  const double r3 = separation * separation * separation;
  return dipole * dipole / (4.0 * std::numbers::pi * permittivity * r3) * (1.0 - 3.0 * cos_angle * cos_angle);
}

cplx bell_element(const DensityMatrix& rho, BellIndex i, BellIndex j) {
  const auto& basis = bell_basis();
  return basis[static_cast<int>(i)].dot(rho.pair() * basis[static_cast<int>(j)]);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  using B = BellIndex;
  static constexpr std::array<std::pair<B, B>, 6> coherences{{{B::Plus, B::Minus},
                                                               {B::Excited, B::Minus},
                                                               {B::Ground, B::Minus},
                                                               {B::Excited, B::Ground},
                                                               {B::Excited, B::Plus},
                                                               {B::Plus, B::Ground}}};
  out << "t,p0,p_plus,p_minus,p1,re_rho_pm,im_rho_pm,re_rho_1m,im_rho_1m,re_rho_0m,im_rho_0m,"
         "re_rho_10,im_rho_10,re_rho_1p,im_rho_1p,re_rho_p0,im_rho_p0\n";
  for (std::size_t n = 0; n < trajectory.states.size(); ++n) {
    const auto& rho = trajectory.states[n];
    const Matrix4c bell = to_bell_frame(rho.pair());
    out << format_number(trajectory.times[n]);
    for (int k : {0, 1, 2, 3}) out << ',' << format_number(bell(k, k).real());
    for (const auto& [a, b] : coherences) {
      const cplx e = bell(static_cast<int>(a), static_cast<int>(b));
      out << ',' << format_number(e.real()) << ',' << format_number(e.imag());
    }
    out << '\n';
  }
}

}  // namespace pairdiss
