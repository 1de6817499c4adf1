#include <doctest.h>

#include <string>

#include "photonfluid/config.hpp"
#include "photonfluid/error.hpp"
#include "photonfluid/report.hpp"
#include "photonfluid/units.hpp"

using namespace photonfluid;
using namespace photonfluid::config;

namespace {

json bundled() { return load_json(PHOTONFLUID_CONFIG_DIR "/paper_s4.cfg"); }

std::string error_of(const json& doc) {
  try {
    parse(doc);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("bundled config parses") {
  const auto rc = parse(bundled());
  CHECK(rc.cavity.length() == 2.0);
  CHECK(rc.cavity.mode_index() == 51282);
  CHECK(rc.medium.n2_direct.value() == 6e-6);
  CHECK(rc.intensity_w_cm2 == 40.0);
  CHECK(rc.quantization_area_cm2 == 76.35);
  CHECK(rc.kernel.kind == KernelConfig::Kind::contact);
  CHECK_FALSE(rc.scenario.has_value());
  CHECK(rc.seed == 0);
}

TEST_CASE("comments are accepted, malformed JSON is not") {
  CHECK(parse_json("// c\n{\"a\": /* x */ 1}")["a"] == 1);
  CHECK_THROWS_AS(parse_json("{\"a\": }"), ValidationError);
  CHECK_THROWS_AS(load_json("/nonexistent/file.cfg"), ValidationError);
}

TEST_CASE("overrides") {
  json doc = bundled();
  apply_override(doc, "drive.intensity_w_cm2=80");
  apply_override(doc, "scenario.kind=ripple");
  apply_override(doc, "numerics.nx=64");
  CHECK(doc["drive"]["intensity_w_cm2"] == 80);
  CHECK(doc["scenario"]["kind"] == "ripple");
  CHECK(doc["numerics"]["nx"] == 64);
  CHECK_THROWS_AS(apply_override(doc, "no_equals_sign"), ValidationError);
  CHECK_THROWS_AS(apply_override(doc, "drive..x=1"), ValidationError);
  CHECK_THROWS_AS(apply_override(doc, "seed.x=1"), ValidationError);
}

TEST_CASE("validation names the field") {
  json doc = bundled();
  doc["cavity"]["lenght_cm"] = 2.0;
  CHECK(error_of(doc).find("cavity.lenght_cm") != std::string::npos);

  doc = bundled();
  doc["cavity"]["reflectivity"] = 1.5;
  CHECK_FALSE(error_of(doc).empty());

  doc = bundled();
  doc["medium"]["n2_esu"] = -6e-6;
  CHECK_THROWS_AS(report::make_parameter_report(parse(doc)), AttractiveMediumError);

  doc = bundled();
  doc["medium"]["n2_cm2_per_w"] = 5e-8;
  CHECK(error_of(doc).find("not both") != std::string::npos);

  doc = bundled();
  doc.erase("drive");
  CHECK(error_of(doc) == "drive: required");

  doc = bundled();
  doc["scenario"] = {{"kind", "ripple"}, {"drive_frequency", 0.6}};
  CHECK(error_of(doc).find("scenario.drive_frequency") != std::string::npos);

  doc = bundled();
  doc["numerics"] = {{"nx", 100}};
  CHECK(error_of(doc).find("numerics.nx") != std::string::npos);

  doc = bundled();
  doc["scenario"] = {{"kind", "turbulence"}};
  CHECK(error_of(doc).find("scenario.kind") != std::string::npos);
}

TEST_CASE("practical n2 units") {
  json doc = bundled();
  doc["medium"].erase("n2_esu");
  doc["medium"]["n2_cm2_per_w"] = units::convert_n2_esu_to_practical(6e-6);
  CHECK(parse(doc).medium.n2_direct.value() == doctest::Approx(6e-6).epsilon(1e-12));
}

TEST_CASE("scenario sections map onto options") {
  json doc = bundled();
  apply_override(doc, "scenario.kind=obstacle_flow");
  apply_override(doc, "scenario.flow_speed=0.9");
  apply_override(doc, "numerics.nx=256");
  apply_override(doc, "numerics.fft_planner=measure");
  apply_override(doc, "seed=7");
  const auto rc = parse(doc);
  REQUIRE(rc.scenario.has_value());
  CHECK(rc.scenario->kind == ScenarioConfig::Kind::obstacle_flow);
  CHECK(rc.scenario->obstacle.flow_speed == 0.9);
  CHECK(rc.scenario->obstacle.nx == 256);
  CHECK(rc.scenario->obstacle.planner == fluidsim::FftPlanner::measure);
  CHECK(rc.scenario->obstacle.seed == 7);
}

TEST_CASE("hash is stable and sensitive") {
  const json a = bundled();
  json b = bundled();
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a).size() == 16);
  apply_override(b, "seed=1");
  CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("kernels scale with the condensate") {
  const auto rc = parse(bundled());
  const auto rep = report::make_parameter_report(rc);
  const auto& p = rep.point.condensate;
  KernelConfig k;
  k.kind = KernelConfig::Kind::roton;
  k.dip_depth = 0.5;
  k.dip_center_over_kc = 0.5;
  k.dip_width_over_kc = 0.1;
  const auto K = build_kernel(k, p);
  const double kc = 2.0 * p.m * p.v_s;
  CHECK(K(0.5 * kc) == doctest::Approx(0.5 * p.V0));

  k.kind = KernelConfig::Kind::tabulated;
  k.table = {{0.0, 1.0}, {1.0, 0.5}};
  const auto T = build_kernel(k, p);
  CHECK(T(0.5 * kc) == doctest::Approx(0.75 * p.V0));
}

TEST_CASE("parameter report") {
  const auto rep = report::make_parameter_report(parse(bundled()));
  CHECK(rep.fluid_regime);
  CHECK(rep.finesse == doctest::Approx(1045.63).epsilon(1e-5));
  const auto j = report::to_json(rep);
  CHECK(j.contains("finesse"));
  CHECK_FALSE(report::to_table(rep).empty());

  json doc = bundled();
  apply_override(doc, "drive.intensity_w_cm2=0");
  const auto off = report::make_parameter_report(parse(doc));
  CHECK_FALSE(off.fluid_regime);
  CHECK(off.v_s == 0.0);
}
