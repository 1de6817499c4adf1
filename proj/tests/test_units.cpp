#include <doctest.h>

#include <cmath>
#include <random>

#include "photonfluid/error.hpp"
#include "photonfluid/units.hpp"

using namespace photonfluid;
using namespace photonfluid::units;

TEST_CASE("CODATA constants") {
  CHECK(kCodata.c == 2.99792458e10);
  CHECK(kCodata.hbar == 1.054571817e-27);
}

TEST_CASE("n2 esu -> practical") {
  // 8 pi 1e7 / c evaluated by hand: 2.513274e8 / 2.99792458e10 = 8.3834e-3
  CHECK(convert_n2_esu_to_practical(1.0) == doctest::Approx(8.3834e-3).epsilon(1e-4));
  CHECK(convert_n2_esu_to_practical(0.0) == 0.0);
  // Worked example: 6e-6 cm^3/erg is quoted as ~5e-8 cm^2/W.
  CHECK(convert_n2_esu_to_practical(6e-6) == doctest::Approx(5.03e-8).epsilon(1e-3));
  CHECK(std::abs(convert_n2_esu_to_practical(6e-6) - 5e-8) / 5e-8 < 0.05);
}

TEST_CASE("n2 conversion round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-12.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::pow(10.0, exponent(rng)) * (i % 2 ? 1.0 : -1.0);
    const double back = convert_n2_practical_to_esu(convert_n2_esu_to_practical(x));
    CHECK(std::abs(back - x) <= 1e-12 * std::abs(x));
  }
}

TEST_CASE("intensity to Gaussian field energy density") {
  // 8 pi * 4e8 / 2.99792458e10 = 0.33534
  CHECK(intensity_to_energy_density(40.0) == doctest::Approx(0.33534).epsilon(1e-4));
  CHECK(intensity_to_energy_density(0.0) == 0.0);
  CHECK(intensity_to_energy_density(1.0) == doctest::Approx(8.3834e-3).epsilon(1e-4));
  CHECK(intensity_to_energy_density(40.0) ==
        doctest::Approx(40.0 * intensity_to_energy_density(1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(intensity_to_energy_density(-1.0), ValidationError);
  CHECK(energy_density_to_intensity(intensity_to_energy_density(40.0)) ==
        doctest::Approx(40.0).epsilon(1e-14));
}

TEST_CASE("Quantity dimension tags") {
  const Quantity n2{6e-6, Dimension::n2_esu};
  const Quantity practical = convert_n2_esu_to_practical(n2);
  CHECK(practical.dimension() == Dimension::n2_practical);
  CHECK(practical.raw() == doctest::Approx(convert_n2_esu_to_practical(6e-6)));
  CHECK(convert_n2_practical_to_esu(practical).in(Dimension::n2_esu) ==
        doctest::Approx(6e-6).epsilon(1e-12));

  CHECK_THROWS_AS(convert_n2_esu_to_practical(practical), DimensionError);
  CHECK_THROWS_AS(convert_n2_practical_to_esu(n2), DimensionError);
  CHECK_THROWS_AS(intensity_to_energy_density(n2), DimensionError);
  CHECK_THROWS_AS(n2 + practical, DimensionError);
  CHECK_THROWS_AS((void)(n2 < practical), DimensionError);

  const Quantity a{1.0, Dimension::length};
  const Quantity b{2.0, Dimension::length};
  CHECK((a + b).raw() == 3.0);
  CHECK((b - a).in(Dimension::length) == 1.0);
  CHECK(a < b);
  CHECK_THROWS_AS(a.in(Dimension::time), DimensionError);
}

TEST_CASE("warning sink") {
  std::string captured;
  set_warning_sink([&](const std::string& m) { captured = m; });
  warn("hello");
  CHECK(captured == "hello");
  set_warning_sink(nullptr);
}
