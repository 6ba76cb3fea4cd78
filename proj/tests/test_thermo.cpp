#include <doctest.h>

#include <cmath>
#include <limits>

#include "pairdiss/error.hpp"
#include "pairdiss/thermo.hpp"
#include "support.hpp"

using namespace pairdiss;
using pairdiss::testing::Gen;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SteadyStateParams at(double x, double r) { return SteadyStateParams(x, r); }

}  // namespace

TEST_CASE("reference point omega*beta_B = 2, r = 1") {
  const auto p = at(2.0, 1.0);
  CHECK(partition_functions(2.0).z_plus == doctest::Approx(1.15365092212535).epsilon(1e-14));
  CHECK(partition_functions(2.0).ratio == doctest::Approx(0.895006414596493).epsilon(1e-14));
  CHECK(energy_ss(p) == doctest::Approx(0.149062907779132).epsilon(1e-13));
  CHECK(energy_th(2.0) == doctest::Approx(0.238405844044235).epsilon(1e-13));
  CHECK(entropy_ss(p) == doctest::Approx(0.441057444058163).epsilon(1e-13));
  CHECK(entropy_th(2.0) == doctest::Approx(0.730667710174415).epsilon(1e-13));
  CHECK(coherence_sum(p) == doctest::Approx(0.117310427826198).epsilon(1e-13));
  CHECK(local_inverse_temperature(p) == doctest::Approx(2.51907890945763).epsilon(1e-13));
}

TEST_CASE("limits") {
  CHECK(energy_ss(at(10.0, 1.0)) / energy_th(10.0) ==
        doctest::Approx(0.500045398899139).epsilon(1e-12));
  CHECK(energy_ss(at(10.0, 0.75)) == doctest::Approx(0.250034051493047).epsilon(1e-12));
  CHECK(entropy_ss(at(8.0, 1.0)) / entropy_th(8.0) ==
        doctest::Approx(0.500316769878872).epsilon(1e-12));
  CHECK(entropy_ss(at(12.0, 0.75)) == doctest::Approx(0.562395051043168).epsilon(1e-12));
  CHECK(entropy_th(12.0) == doctest::Approx(0.000159748577408619).epsilon(1e-12));
  CHECK(local_inverse_temperature(at(0.01, 1.0)) / 0.01 ==
        doctest::Approx(1.33333086421811).epsilon(1e-10));
  CHECK(energy_limit_cold_init(3.0) == doctest::Approx(energy_ss(at(3.0, 1.0))).epsilon(1e-14));
  CHECK(energy_limit_hot_init(3.0) == doctest::Approx(energy_ss(at(3.0, 0.75))).epsilon(1e-14));
}

TEST_CASE("infinite temperatures") {
  CHECK(energy_ss(at(kInf, 1.0)) == 0.0);
  CHECK(energy_ss(at(kInf, 0.75)) == 0.25);
  CHECK(energy_ss(at(-kInf, 1.0)) == 2.0);
  CHECK(entropy_ss(at(kInf, 1.0)) == 0.0);
  CHECK(entropy_th(kInf) == 0.0);
  CHECK(local_inverse_temperature(at(kInf, 1.0)) == kInf);
  CHECK(local_inverse_temperature(at(-kInf, 1.0)) == -kInf);
  CHECK(partition_functions(-kInf).ratio == doctest::Approx(1.0));
  CHECK(partition_functions(0.0).ratio == doctest::Approx(0.75));
  CHECK_THROWS_AS(entropy_ss_coherence_form(at(kInf, 1.0)), Error);
  CHECK_THROWS_AS(entropy_critical_r(0.0), Error);
  CHECK_THROWS_AS(SteadyStateParams(1.0, 1.5), Error);
  CHECK_THROWS_AS(SteadyStateParams(std::nan(""), 0.5), Error);
}

TEST_CASE("property: closed forms equal the coherence forms") {
  Gen gen(31);
  for (int i = 0; i < 1000; ++i) {
    const auto p = at(gen.uniform(-4.0, 4.0), gen.uniform(0.0, 1.0));
    CHECK(std::abs(energy_ss(p) - energy_ss_coherence_form(p)) < 1e-12);
    CHECK(std::abs(entropy_ss(p) - entropy_ss_coherence_form(p)) < 1e-12);
  }
  for (double r : {0.0, 1.0})
    CHECK(std::abs(entropy_ss(at(1.7, r)) - entropy_ss_coherence_form(at(1.7, r))) < 1e-12);
}

TEST_CASE("property: observables match the density matrix") {
  Gen gen(32);
  const Matrix4c h = free_hamiltonian(1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = gen.uniform(-4.0, 4.0);
    const double r = gen.uniform(0.0, 1.0);
    const auto rho = steady_state_analytic(x, r);
    CHECK(std::abs(energy_ss(at(x, r)) - (h * rho.pair()).trace().real()) < 1e-10);
    CHECK(std::abs(entropy_ss(at(x, r)) - von_neumann_entropy(rho)) < 1e-10);
    CHECK(std::abs(coherence_sum(at(x, r)) - (rho(1, 2) + rho(2, 1)).real()) < 1e-12);
  }
}

TEST_CASE("property: apparent temperature of every steady state is the bath's") {
  Gen gen(33);
  for (int i = 0; i < 500; ++i) {
    const double x = gen.uniform(-6.0, 6.0);
    const double r = 1.0 - gen.uniform(0.0, 1.0);
    const auto t = apparent_temperature(steady_state_analytic(x, r));
    REQUIRE(t.has_value());
    CHECK(std::abs(*t - x) < 1e-10);
  }
  CHECK_FALSE(apparent_temperature(steady_state_analytic(1.0, 0.0)).has_value());
  CHECK(*apparent_temperature(thermal_state(kInf)) == kInf);
  CHECK(*apparent_temperature(thermal_state(-kInf)) == -kInf);
}

TEST_CASE("property: heat flow forms agree and vanish at the fixed point") {
  Gen gen(34);
  for (int i = 0; i < 1000; ++i) {
    const BathSpec bath(gen.uniform(0.1, 2.0), gen.uniform(-4.0, 4.0));
    const auto pops = gen.populations();
    CHECK(std::abs(heat_flow_rate(pops, bath) - heat_flow_rate_apparent_form(pops, bath)) < 1e-12);
    const auto ss = steady_state_populations(bath.omega_beta_bath(), pops.r);
    CHECK(std::abs(heat_flow_rate(ss, bath)) < 1e-14);
  }
}

TEST_CASE("property: heat flow is the energy derivative along a trajectory") {
  Gen gen(35);
  const Matrix4c h = free_hamiltonian(1.0);
  for (int i = 0; i < 5; ++i) {
    const BathSpec bath(gen.uniform(0.1, 2.0), gen.uniform(-4.0, 4.0));
    const double dt = 1e-4;
    const auto traj = evolve(gen.density_matrix(), liouvillian_collective(bath), 1.0, dt);
    for (std::size_t k = 1; k + 1 < traj.states.size(); k += 499) {
      const double e_next = (h * traj.states[k + 1].pair()).trace().real();
      const double e_prev = (h * traj.states[k - 1].pair()).trace().real();
      const double flow = heat_flow_rate(to_bell_populations(traj.states[k]), bath);
      CHECK(std::abs((e_next - e_prev) / (2.0 * dt) - flow) < 1e-6);
    }
  }
}

TEST_CASE("property: coherence bounds") {
  Gen gen(36);
  for (int i = 0; i < 1000; ++i) {
    const double x = gen.uniform(-10.0, 10.0);
    const double c = coherence_sum(at(x, gen.uniform(0.0, 1.0)));
    CHECK(c >= -1.0);
    CHECK(c <= 1.0 / 3.0 + 1e-15);
    CHECK(std::abs(coherence_sum(at(x, r_from_initial_beta(x)))) < 1e-15);
  }
}

TEST_CASE("property: energy follows the sign of the coherence") {
  Gen gen(37);
  for (int i = 0; i < 1000; ++i) {
    const double x = gen.nonzero(-4.0, 4.0);
    const auto p = at(x, gen.uniform(0.0, 1.0));
    const double c = coherence_sum(p);
    if (std::abs(c) < 1e-12) continue;
    const bool above = energy_ss(p) > energy_th(x);
    CHECK(above == ((x > 0.0) == (c < 0.0)));
  }
}

TEST_CASE("property: entropy sign laws") {
  Gen gen(38);
  for (int i = 0; i < 1000; ++i) {
    const double x = gen.nonzero(-4.0, 4.0);
    const auto p = at(x, gen.uniform(0.0, 1.0));
    if (coherence_sum(p) > 1e-12) CHECK(entropy_ss(p) < entropy_th(x));
    const double b0 = gen.uniform(-6.0, 6.0);
    if (std::abs(std::abs(b0) - std::abs(x)) < 1e-6) continue;
    const auto thermal_init = at(x, r_from_initial_beta(b0));
    const bool hotter_start = std::abs(b0) < std::abs(x);
    CHECK((entropy_ss(thermal_init) > entropy_th(x)) == hotter_start);
  }
}

TEST_CASE("mitigation flips exactly at |beta_0| = beta_B") {
  for (double xb : {0.5, 1.0, 2.0, 3.5}) {
    auto excess = [&](double b0) {
      return energy_ss(at(xb, r_from_initial_beta(b0))) - energy_th(xb);
    };
    double lo = 0.0;
    double hi = 3.0 * xb;
    REQUIRE(excess(lo) > 0.0);
    REQUIRE(excess(hi) < 0.0);
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (lo + hi);
      (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    CHECK(lo == doctest::Approx(xb).epsilon(1e-9));
  }
}

TEST_CASE("property: r from the initial temperature is even") {
  Gen gen(39);
  for (int i = 0; i < 500; ++i) {
    const double b = gen.uniform(0.1, 5.0);
    CHECK(std::abs(r_from_initial_beta(b) - r_from_initial_beta(-b)) < 1e-12);
    CHECK(r_from_initial_beta(b) >= 0.75);
    CHECK(r_from_initial_beta(b) <= 1.0);
  }
}

TEST_CASE("entropy extremum and crossing") {
  const double expected_cr[] = {0.735009867865767, 0.696861224611554, 0.608510969633033,
                                0.551571450399457};
  const double xs[] = {0.5, 1.0, 2.0, 3.0};
  for (int k = 0; k < 4; ++k) {
    for (double sign : {1.0, -1.0}) {
      const double x = sign * xs[k];
      const auto cr = entropy_critical_r(x);
      CHECK(cr.r_cr == doctest::Approx(expected_cr[k]).epsilon(1e-12));
      CHECK(cr.r_cr <= std::min(0.75, partition_functions(x).ratio));
      CHECK(std::abs(entropy_ss_slope(at(x, cr.r_cr))) < 1e-12);
      const auto cross = entropy_crossing_r_star(x);
      CHECK(std::abs(entropy_ss(at(x, cross.r_star)) - entropy_th(x)) < 1e-10);
      CHECK(cross.c_star < 0.0);
    }
  }
  CHECK(entropy_crossing_r_star(2.0).r_star == doctest::Approx(0.290456341975285).epsilon(1e-10));
  CHECK(entropy_critical_r(2.0).omega_star ==
        doctest::Approx(energy_ss(at(2.0, 1.0))).epsilon(1e-14));
}

TEST_CASE("observation bundle") {
  const auto rep = observe(at(2.0, 1.0));
  CHECK(rep.coherence_l1 == doctest::Approx(rep.coherence_c));
  REQUIRE(rep.apparent_temp_inverse.has_value());
  CHECK(*rep.apparent_temp_inverse == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_FALSE(observe(at(2.0, 0.0)).apparent_temp_inverse.has_value());
}
