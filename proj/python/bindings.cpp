#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pairdiss/dynamics.hpp"
#include "pairdiss/error.hpp"
#include "pairdiss/sweep.hpp"
#include "pairdiss/thermo.hpp"

namespace py = pybind11;
using namespace pairdiss;

namespace {

py::dict populations_dict(const BellPopulations& p) {
  py::dict d;
  d["p0"] = p.p0;
  d["p_plus"] = p.pplus;
  d["p_minus"] = p.pminus;
  d["p1"] = p.p1;
  d["r"] = p.r;
  return d;
}

std::string sweep_csv(const SweepConfig& config) {
  std::ostringstream out;
  write_sweep_csv(out, config, run_sweep(config));
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Collective dissipation of a qubit pair";
  m.attr("__version__") = std::string(kVersion);

  static py::exception<Error> error_type(m, "PairdissError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("thermal_state", [](double x) { return ComplexMatrix(thermal_state(x).matrix()); },
        py::arg("omega_beta"));
  m.def("steady_state_analytic",
        [](double x, double r) { return ComplexMatrix(steady_state_analytic(x, r).matrix()); },
        py::arg("omega_beta_bath"), py::arg("r"));
  m.def(
      "steady_state_numeric",
      [](double gamma, double x, double r, double lamb, double inter, bool collective) {
        const BathSpec bath(gamma, x, lamb, inter);
        const auto l = collective ? liouvillian_collective(bath) : liouvillian_independent(bath);
        return ComplexMatrix(
            steady_state_numeric(l, collective ? std::optional<double>(r) : std::nullopt).matrix());
      },
      py::arg("gamma"), py::arg("omega_beta_bath"), py::arg("r") = 1.0, py::arg("lamb_shift") = 0.0,
      py::arg("interaction") = 0.0, py::arg("collective") = true);
  m.def(
      "liouvillian",
      [](double gamma, double x, double lamb, double inter, bool collective) {
        const BathSpec bath(gamma, x, lamb, inter);
        return Matrix16c(collective ? liouvillian_collective(bath).matrix()
                                    : liouvillian_independent(bath).matrix());
      },
      py::arg("gamma"), py::arg("omega_beta_bath"), py::arg("lamb_shift") = 0.0,
      py::arg("interaction") = 0.0, py::arg("collective") = true);
  m.def(
      "trace_distance",
      [](const ComplexMatrix& a, const ComplexMatrix& b) {
        return trace_distance(DensityMatrix(a), DensityMatrix(b));
      },
      py::arg("a"), py::arg("b"));
  m.def("von_neumann_entropy",
        [](const ComplexMatrix& rho) { return von_neumann_entropy(DensityMatrix(rho)); },
        py::arg("rho"));

  m.def(
      "population_dynamics",
      [](const std::vector<double>& init, double gamma, double x, double t) {
        if (init.size() != 4) throw Error(ErrorCode::InvalidArgument, "need four populations");
        const auto p = BellPopulations::make(init[0], init[1], init[2], init[3]);
        return populations_dict(population_dynamics_closed_form(p, BathSpec(gamma, x), t));
      },
      py::arg("populations"), py::arg("gamma"), py::arg("omega_beta_bath"), py::arg("t"));
  m.def(
      "evolve_final",
      [](const ComplexMatrix& rho0, double gamma, double x, double t_max, double dt,
         bool collective) {
        const BathSpec bath(gamma, x);
        const auto l = collective ? liouvillian_collective(bath) : liouvillian_independent(bath);
        const auto traj = evolve(DensityMatrix(rho0), l, t_max, dt, static_cast<std::size_t>(-1));
        return ComplexMatrix(traj.final_state().matrix());
      },
      py::arg("rho0"), py::arg("gamma"), py::arg("omega_beta_bath"), py::arg("t_max"),
      py::arg("dt") = 0.005, py::arg("collective") = true);

  m.def("r_from_initial_beta", &r_from_initial_beta, py::arg("omega_beta0"));
  m.def(
      "observe",
      [](double x, double r) {
        const auto rep = observe(SteadyStateParams(x, r));
        py::dict d;
        d["energy_ss"] = rep.energy_ss;
        d["energy_th"] = rep.energy_th;
        d["entropy_ss"] = rep.entropy_ss;
        d["entropy_th"] = rep.entropy_th;
        d["coherence"] = rep.coherence_c;
        d["omega_beta_loc"] = rep.local_beta;
        d["omega_over_apparent_t"] = rep.apparent_temp_inverse;
        return d;
      },
      py::arg("omega_beta_bath"), py::arg("r"));
  m.def(
      "entropy_critical_r", [](double x) { return entropy_critical_r(x).r_cr; },
      py::arg("omega_beta_bath"));
  m.def(
      "entropy_crossing_r", [](double x) { return entropy_crossing_r_star(x).r_star; },
      py::arg("omega_beta_bath"));

  m.def("figure_presets", &figure_preset_names);
  m.def(
      "figure_csv", [](const std::string& name) { return sweep_csv(figure_preset(name)); },
      py::arg("name"));
  m.def(
      "sweep_csv",
      [](const std::string& axis, const std::string& grid, std::optional<double> omega_beta_bath,
         std::optional<double> omega_beta0, std::optional<double> r) {
        SweepConfig c;
        c.mode = parse_sweep_mode(axis);
        c.grid = Grid::parse(grid);
        c.fixed.omega_beta_bath = omega_beta_bath;
        c.fixed.omega_beta0 = omega_beta0;
        c.fixed.r = r;
        return sweep_csv(c);
      },
      py::arg("axis"), py::arg("grid"), py::arg("omega_beta_bath") = py::none(),
      py::arg("omega_beta0") = py::none(), py::arg("r") = py::none());
}
