#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "photonfluid/error.hpp"
#include "photonfluid/fluidsim/lattice.hpp"
#include "photonfluid/fluidsim/scenarios.hpp"
#include "photonfluid/fluidsim/snapshot.hpp"
#include "photonfluid/fluidsim/stepper.hpp"
#include "photonfluid/fluidsim/vortex.hpp"
#include "photonfluid/units.hpp"

using namespace photonfluid;
using namespace photonfluid::fluidsim;
using units::kPi;

namespace {

// Background plus a few long-wavelength modes; periodic on the box.
LatticeField wavy(std::size_t n, double dx, double amp = 0.2) {
  LatticeField f(n, n, dx);
  const double L = n * dx;
  for (std::size_t iy = 0; iy < n; ++iy) {
    for (std::size_t ix = 0; ix < n; ++ix) {
      const double x = ix * dx, y = iy * dx;
      const double a = 2 * kPi * x / L, b = 2 * kPi * y / L;
      f(ix, iy) = cplx(1.0 + amp * std::cos(a) * std::sin(2 * b), amp * std::sin(3 * a + b));
    }
  }
  return f;
}

double distance(const LatticeField& a, const LatticeField& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(s * a.dx() * a.dx());
}

// Pair of singly quantized vortices with a tanh core.
LatticeField vortex_pair(std::size_t n, double dx, double x1, double y1, double x2, double y2) {
  LatticeField f(n, n, dx);
  for (std::size_t iy = 0; iy < n; ++iy) {
    for (std::size_t ix = 0; ix < n; ++ix) {
      const double x = ix * dx, y = iy * dx;
      const double r1 = std::hypot(x - x1, y - y1), r2 = std::hypot(x - x2, y - y2);
      const double phase = std::atan2(y - y1, x - x1) - std::atan2(y - y2, x - x2);
      f(ix, iy) = std::tanh(r1) * std::tanh(r2) * std::polar(1.0, phase);
    }
  }
  return f;
}

}  // namespace

TEST_CASE("lattice basics") {
  CHECK(is_power_of_two(64));
  CHECK_FALSE(is_power_of_two(48));
  CHECK_FALSE(is_power_of_two(0));
  CHECK_THROWS_AS(LatticeField(48, 64, 0.5), ValidationError);
  CHECK_THROWS_AS(LatticeField(64, 64, 0.0), ValidationError);
  LatticeField f(8, 4, 0.5, cplx(2.0, 0.0));
  CHECK(f.norm() == doctest::Approx(4.0 * 32 * 0.25));
  CHECK(f.index(3, 2) == 19);
  CHECK(wavenumber(1, 8, 0.5) == doctest::Approx(2 * kPi / 4.0));
  CHECK(wavenumber(7, 8, 0.5) == doctest::Approx(-2 * kPi / 4.0));
}

TEST_CASE("healing-length scales") {
  const auto p = medium::CondensateParams::make(2.8336e-33, 8e11, 2.8336e-33 * 1.8e15 / 8e11, 152.7);
  const auto s = nondimensionalize(p);
  CHECK(s.velocity == doctest::Approx(p.v_s));
  CHECK(s.length == doctest::Approx(units::kCodata.hbar / (p.m * p.v_s)));
  CHECK(s.time == doctest::Approx(units::kCodata.hbar / p.mu_chem));
  CHECK(s.length / s.time == doctest::Approx(s.velocity));
  CHECK(s.length_to_dimensionless(s.length_to_physical(3.0)) == doctest::Approx(3.0));
  CHECK_THROWS_AS(nondimensionalize(medium::CondensateParams::make(1e-33, 0.0, 1.0, 1.0)), ValidationError);
}

TEST_CASE("trivial states") {
  SplitStepper st(32, 32, 0.5);
  LatticeField zero(32, 32, 0.5);
  st.advance(zero, 0.02, 50);
  for (const auto& z : zero.data()) CHECK(z == cplx(0.0, 0.0));

  LatticeField one(32, 32, 0.5, cplx(1.0, 0.0));
  st.advance(one, 0.02, 50);
  const cplx expected = std::polar(1.0, -1.0);
  for (const auto& z : one.data()) CHECK(std::abs(z - expected) < 1e-12);
  CHECK(one.time() == doctest::Approx(1.0));

  // with the chemical potential removed the background is stationary
  LatticeField rest(32, 32, 0.5, cplx(1.0, 0.0));
  Hamiltonian h;
  h.chemical_shift = 1.0;
  st.advance(rest, 0.02, 50, h);
  for (const auto& z : rest.data()) CHECK(std::abs(z - cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("step validation") {
  SplitStepper st(16, 16, 0.5);
  LatticeField f(16, 16, 0.5, cplx(1.0, 0.0));
  CHECK(max_stable_dt(0.5) == doctest::Approx(0.25 / kPi));
  CHECK(max_stable_dt(2.0) == 0.1);
  CHECK_THROWS_AS(st.step(f, 0.2, {}), ValidationError);
  CHECK_THROWS_AS(st.step(f, -0.01, {}), ValidationError);
  LatticeField wrong(32, 16, 0.5);
  CHECK_THROWS_AS(st.step(wrong, 0.01, {}), ValidationError);
  f.data()[3] = cplx(std::nan(""), 0.0);
  CHECK_THROWS_AS(st.step(f, 0.01, {}), NumericalError);
}

TEST_CASE("fused and stepwise evolution agree") {
  SplitStepper st(32, 32, 0.5);
  LatticeField a = wavy(32, 0.5);
  LatticeField b = a;
  st.advance(a, 0.02, 40);
  for (int i = 0; i < 40; ++i) st.step(b, 0.02);
  CHECK(distance(a, b) < 1e-11);
  int seen = 0;
  LatticeField c = wavy(32, 0.5);
  st.advance(c, 0.02, 40, {}, [&](const LatticeField&) { ++seen; });
  CHECK(seen == 40);
  CHECK(distance(a, c) < 1e-11);
}

TEST_CASE("norm and energy conservation") {
  const double dx = 0.5;
  const double dt = dx * dx / 10.0;
  SplitStepper st(64, 64, dx);
  LatticeField f = wavy(64, dx);
  const double n0 = f.norm();
  st.advance(f, dt, 10000);
  CHECK(std::abs(f.norm() - n0) / n0 < 1e-10);

  // weak sound on the background: the splitting error stays below 1e-6
  LatticeField g = wavy(64, dx, 0.05);
  const double e0 = st.energy(g);
  double worst = 0.0;
  for (int block = 0; block < 10; ++block) {
    st.advance(g, dt, 100);
    worst = std::max(worst, std::abs(st.energy(g) - e0) / std::abs(e0));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("Strang splitting is second order") {
  const double dx = 0.5;
  SplitStepper st(32, 32, dx);
  const double T = 1.0;
  LatticeField ref = wavy(32, dx, 0.4);
  st.advance(ref, T / 2048, 2048);
  double err[3];
  for (int j = 0; j < 3; ++j) {
    const std::size_t steps = 16u << j;
    LatticeField f = wavy(32, dx, 0.4);
    st.advance(f, T / steps, steps);
    err[j] = distance(f, ref);
  }
  CHECK(err[0] / err[1] == doctest::Approx(4.0).epsilon(0.125));
  CHECK(err[1] / err[2] == doctest::Approx(4.0).epsilon(0.125));
}

TEST_CASE("vortex detection") {
  const double dx = 0.5;
  const auto f = vortex_pair(64, dx, 10.3, 16.1, 21.7, 15.6);
  const auto found = detect_vortices(f);
  REQUIRE(found.size() == 2);
  int plus = 0, minus = 0;
  for (const auto& v : found) {
    if (v.charge == 1) {
      ++plus;
      CHECK(std::hypot(v.x - 10.3, v.y - 16.1) < dx);
    } else {
      CHECK(v.charge == -1);
      ++minus;
      CHECK(std::hypot(v.x - 21.7, v.y - 15.6) < dx);
    }
  }
  CHECK(plus == 1);
  CHECK(minus == 1);
  CHECK(total_winding(f) == 0);
}

TEST_CASE("smooth phase has no vortices") {
  LatticeField f(64, 64, 0.5);
  const double L = 32.0;
  for (std::size_t iy = 0; iy < 64; ++iy) {
    for (std::size_t ix = 0; ix < 64; ++ix) {
      const double a = 2 * kPi * ix * 0.5 / L, b = 2 * kPi * iy * 0.5 / L;
      const double phi = 1.3 * std::sin(a) + 0.9 * std::cos(2 * b + 0.4) + 0.7 * std::sin(a + b);
      f(ix, iy) = std::polar(1.0 + 0.1 * std::cos(a - b), phi);
    }
  }
  CHECK(detect_vortices(f).empty());
  CHECK(total_winding(f) == 0);
  // density mask: the empty field is skipped
  CHECK(detect_vortices(LatticeField(16, 16, 0.5)).empty());
}

TEST_CASE("snapshot round trip") {
  LatticeField f = wavy(16, 0.25);
  f.set_time(3.5);
  std::stringstream ss;
  write_snapshot(ss, f);
  CHECK(ss.str().size() == 4 + 4 + 4 + 4 + 8 + 8 + 16 * 16 * 16);
  CHECK(ss.str().substr(0, 4) == "PHFL");
  const auto g = read_snapshot(ss);
  CHECK(g.nx() == 16);
  CHECK(g.dx() == 0.25);
  CHECK(g.time() == 3.5);
  CHECK(g.data() == f.data());

  std::stringstream bad("PHFX0000");
  CHECK_THROWS_AS(read_snapshot(bad), ValidationError);
}

TEST_CASE("dispersion probe") {
  CHECK(bogoliubov_frequency(2.0) == doctest::Approx(std::sqrt(8.0)));
  CHECK_THROWS_AS(measure_mode_frequency(0.3, 32, 4, 0.5), ValidationError);
  const double k = 2 * kPi / 16.0;
  const auto s = measure_mode_frequency(k, 32, 4, 0.5);
  CHECK(s.resolved);
  CHECK(s.omega == doctest::Approx(bogoliubov_frequency(k)).epsilon(1e-3));
  const auto many = measure_dispersion({0.5, 2.0});
  REQUIRE(many.size() == 2);
  for (const auto& m : many) CHECK(m.relative_error < 1e-3);
}

TEST_CASE("ripple validation") {
  RippleOptions o;
  CHECK_NOTHROW(validate(o));
  o.drive_frequency = 0.5;
  CHECK_THROWS_AS(validate(o), ValidationError);
  o = {};
  o.amplitude = 0.1;
  CHECK_THROWS_AS(validate(o), ValidationError);
  o = {};
  o.nx = o.ny = 64;
  CHECK_THROWS_AS(validate(o), ValidationError);
}

TEST_CASE("obstacle setup") {
  ObstacleOptions o;
  CHECK_NOTHROW(validate(o));
  CHECK(realized_flow_speed(0.5, 512, 0.5) == doctest::Approx(2 * kPi * 20 / 256.0));
  const auto U = obstacle_potential(o);
  REQUIRE(U.size() == 512 * 512);
  // R = 5, w = 1: the plateau sits at U0 / (1 + e^-5)
  const double peak = *std::max_element(U.begin(), U.end());
  CHECK(peak <= 10.0 / (1.0 + std::exp(-5.0)));
  CHECK(peak > 10.0 / (1.0 + std::exp(-4.5)));
  CHECK(U[0] < 1e-10);

  o.center_x = 0.02;
  CHECK_THROWS_AS(validate(o), ValidationError);
  o = {};
  o.flow_speed = -0.1;
  CHECK_THROWS_AS(validate(o), ValidationError);
  o = {};
  o.obstacle_radius = 0.0;
  CHECK_THROWS_AS(validate(o), ValidationError);
}

TEST_CASE("slow flow past a small obstacle stays quiet") {
  ObstacleOptions o;
  o.nx = o.ny = 128;
  o.sponge_width = 6.0;
  o.obstacle_radius = 3.0;
  o.center_x = 0.4;
  o.flow_speed = 0.2;
  o.ramp_time = 20.0;
  o.duration = 30.0;
  const auto r = run_obstacle_flow(o);
  CHECK(r.realized_flow_speed == doctest::Approx(realized_flow_speed(0.2, 128, 0.5)));
  CHECK_FALSE(r.shed());
  CHECK(r.snapshots.size() >= 4);
  for (const auto& s : r.snapshots) CHECK(s.total_winding == 0);
  CHECK(r.drag.size() == r.snapshots.size());
}
