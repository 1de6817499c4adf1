#include <doctest.h>

#include <cmath>
#include <limits>

#include "photonfluid/cavity.hpp"
#include "photonfluid/error.hpp"
#include "photonfluid/medium.hpp"
#include "photonfluid/units.hpp"

using namespace photonfluid;
using namespace photonfluid::medium;
using units::kCodata;
using units::kPi;

namespace {
MediumSpec direct(double n2) {
  MediumSpec s;
  s.atom_density = 1e12;
  s.detuning = 2.0 * kPi * 600e6;
  s.n2_direct = n2;
  return s;
}
}  // namespace

TEST_CASE("two-level Kerr coefficient power laws") {
  MediumSpec s;
  s.atom_density = 1e12;
  s.dipole = 2.5e-18;
  s.detuning = 2.0 * kPi * 600e6;
  const double base = grischkowsky_n2(s).esu;
  CHECK(grischkowsky_n2(s).source == KerrSource::formula);

  // pi N mu^4 / (hbar^3 Delta^3) written out independently
  const double h = kCodata.hbar;
  const double hand = kPi * 1e12 * std::pow(2.5e-18, 4) / (h * h * h * std::pow(s.detuning, 3));
  CHECK(base == doctest::Approx(hand).epsilon(1e-12));

  MediumSpec t = s;
  t.atom_density *= 3.0;
  CHECK(grischkowsky_n2(t).esu == doctest::Approx(3.0 * base).epsilon(1e-12));
  t = s;
  t.dipole = 2.0 * *s.dipole;
  CHECK(grischkowsky_n2(t).esu == doctest::Approx(16.0 * base).epsilon(1e-12));
  t = s;
  t.detuning *= 2.0;
  CHECK(grischkowsky_n2(t).esu == doctest::Approx(base / 8.0).epsilon(1e-12));
  t = s;
  t.detuning = -s.detuning;
  CHECK(grischkowsky_n2(t).esu == doctest::Approx(-base).epsilon(1e-12));
}

TEST_CASE("implied dipole inverts the formula") {
  const double delta = 2.0 * kPi * 600e6;
  const double mu = implied_dipole(6e-6, 1e12, delta);
  MediumSpec s;
  s.atom_density = 1e12;
  s.dipole = mu;
  s.detuning = delta;
  CHECK(grischkowsky_n2(s).esu == doctest::Approx(6e-6).epsilon(1e-12));
}

TEST_CASE("direct n2 overrides the formula") {
  const auto k = grischkowsky_n2(direct(6e-6));
  CHECK(k.esu == 6e-6);
  CHECK(k.source == KerrSource::direct);
}

TEST_CASE("spec validation") {
  MediumSpec s;
  s.atom_density = -1.0;
  s.detuning = 1.0;
  s.dipole = 1e-18;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.atom_density = 1e12;
  s.detuning = 0.0;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.detuning = 1.0;
  s.dipole.reset();
  CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("interaction strength and photon number") {
  const double omega = 2.0 * kPi * kCodata.c / 7.8e-5;
  const double V = interaction_strength(6e-6, omega, 152.7);
  const double hw = kCodata.hbar * omega;
  CHECK(V == doctest::Approx(8.0 * kPi * hw * hw * 6e-6 / 152.7).epsilon(1e-14));
  CHECK(interaction_strength(6e-6, omega, 305.4) == doctest::Approx(V / 2).epsilon(1e-14));
  CHECK(interaction_strength(0.0, omega, 152.7) == 0.0);
  CHECK_THROWS_AS(interaction_strength(-6e-6, omega, 152.7), AttractiveMediumError);
  CHECK_THROWS_AS(interaction_strength(6e-6, omega, 0.0), ValidationError);

  const double e0 = units::intensity_to_energy_density(40.0);
  const double N0 = condensate_number(e0, omega, 152.7);
  CHECK(N0 == doctest::Approx(e0 * 152.7 / (8 * kPi * hw)).epsilon(1e-14));
  CHECK(condensate_number(2 * e0, omega, 152.7) == doctest::Approx(2 * N0).epsilon(1e-14));
  CHECK(quantization_volume(2.0, 76.35) == doctest::Approx(152.7));
}

TEST_CASE("condensate identities with m = hbar omega / c^2") {
  const auto g = cavity::CavityGeometry::make(2.0, 0.997, 7.8e-5);
  const double omega = cavity::optical_frequency(g);
  const double m = cavity::effective_mass_from_frequency(g);
  for (double n2 : {1e-8, 6e-6, 3e-4}) {
    for (double intensity : {1.0, 40.0, 1000.0}) {
      for (double area : {1.0, 76.35}) {
        const double e0 = units::intensity_to_energy_density(intensity);
        const double vcav = quantization_volume(2.0, area);
        const auto p = CondensateParams::make(
            m, condensate_number(e0, omega, vcav),
            interaction_strength(n2, omega, vcav), vcav);
        const double dn = n2 * e0;
        CHECK(std::abs(p.mu_chem / chemical_potential_from_index_shift(omega, dn) - 1) < 1e-12);
        CHECK(std::abs(p.v_s / sound_speed_from_index_shift(dn) - 1) < 1e-12);
        CHECK(p.mu_chem == chemical_potential(p));
        CHECK(p.v_s == sound_speed(p));
      }
    }
  }
}

TEST_CASE("condensate bundle validation") {
  CHECK_THROWS_AS(CondensateParams::make(0.0, 1.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(CondensateParams::make(1.0, -1.0, 1.0, 1.0), ValidationError);
  const auto empty = CondensateParams::make(1e-33, 0.0, 1e-20, 1.0);
  CHECK(empty.mu_chem == 0.0);
  CHECK(empty.v_s == 0.0);
  CHECK_FALSE(condensate_dominant(empty));
  CHECK(condensate_dominant(CondensateParams::make(1e-33, 1e7, 1e-20, 1.0)));
  CHECK_FALSE(condensate_dominant(CondensateParams::make(1e-33, 1e5, 1e-20, 1.0)));
}

TEST_CASE("timescales") {
  const auto g = cavity::CavityGeometry::make(2.0, 0.997, 7.8e-5);
  const double omega = cavity::optical_frequency(g);
  const double e0 = units::intensity_to_energy_density(40.0);
  const auto t = timescales(g, omega, 6e-6, e0);
  CHECK(t.tau_cav == doctest::Approx(2.0 * cavity::finesse(0.997) * 2.0 / kCodata.c).epsilon(1e-14));
  CHECK(t.tau_coll == doctest::Approx(1.0 / (12.0 * omega * 6e-6 * e0)).epsilon(1e-14));
  CHECK(t.collisions_per_ringdown == doctest::Approx(t.tau_cav / t.tau_coll));
  CHECK(t.fluid_regime);

  const auto off = timescales(g, omega, 6e-6, 0.0);
  CHECK(off.tau_coll == std::numeric_limits<double>::infinity());
  CHECK(off.collisions_per_ringdown == 0.0);
  CHECK_FALSE(off.fluid_regime);

  // weak drive: ratio falls below threshold
  const auto weak = timescales(g, omega, 6e-6, e0 * 1e-3);
  CHECK(weak.collisions_per_ringdown == doctest::Approx(t.collisions_per_ringdown * 1e-3));
  CHECK_FALSE(weak.fluid_regime);
}

TEST_CASE("operating point rejects self-focusing media") {
  const auto g = cavity::CavityGeometry::make(2.0, 0.997, 7.8e-5);
  CHECK_THROWS_AS(operating_point(g, direct(-6e-6), 40.0, 76.35), AttractiveMediumError);
  CHECK_THROWS_AS(operating_point(g, direct(6e-6), -1.0, 76.35), ValidationError);
  CHECK_THROWS_AS(operating_point(g, direct(6e-6), 40.0, 0.0), ValidationError);
  const auto op = operating_point(g, direct(6e-6), 40.0, 76.35);
  CHECK(op.index_shift == doctest::Approx(6e-6 * op.e0_sq));
  CHECK(op.condensate.N0 > 1e11);
}
