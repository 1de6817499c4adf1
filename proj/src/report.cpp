#include "photonfluid/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "photonfluid/cavity.hpp"
#include "photonfluid/fluidsim/lattice.hpp"
#include "photonfluid/error.hpp"
#include "photonfluid/units.hpp"

namespace photonfluid::report {

using config::json;

ParameterReport make_parameter_report(const config::RunConfig& rc) {
  ParameterReport r;
  const auto& geom = rc.cavity;
  r.point = medium::operating_point(geom, rc.medium, rc.intensity_w_cm2,
                                    rc.quantization_area_cm2, rc.thresholds.fluid_ratio_min);
  const auto& op = r.point;
  const auto& cp = op.condensate;

  r.mode_index = geom.mode_index();
  r.m_eff = cp.m;
  r.m_from_frequency = cavity::effective_mass_from_frequency(geom);
  r.omega = op.omega;
  r.finesse = cavity::finesse(geom.reflectivity());
  r.tau_cav = op.times.tau_cav;
  r.tau_coll = op.times.tau_coll;
  r.collisions_per_ringdown = op.times.collisions_per_ringdown;
  r.e0_sq = op.e0_sq;
  r.n2_esu = op.n2.esu;
  r.n2_practical = units::convert_n2_esu_to_practical(op.n2.esu);
  r.n2_source = op.n2.source;
  if (rc.medium.atom_density > 0.0 && rc.medium.detuning != 0.0 && op.n2.esu > 0.0 &&
      rc.medium.detuning > 0.0) {
    r.implied_dipole = medium::implied_dipole(op.n2.esu, rc.medium.atom_density,
                                              rc.medium.detuning);
  }
  r.index_shift = op.index_shift;
  r.quantization_area = op.area;
  r.V_cav = cp.V_cav;
  r.V0 = cp.V0;
  r.N0 = cp.N0;
  r.mu = cp.mu_chem;
  r.v_s = cp.v_s;
  r.v_s_from_index_shift = medium::sound_speed_from_index_shift(op.index_shift);
  r.condensate_dominant = medium::condensate_dominant(cp, rc.thresholds.condensate_min);
  r.fluid_regime = op.times.fluid_regime && r.condensate_dominant;

  if (cp.mu_chem > 0.0) {
    const auto kernel = config::build_kernel(rc.kernel, cp);
    r.kappa_c = bogoliubov::transition_momentum(cp, kernel);
    r.lambda_c = bogoliubov::collective_length(r.kappa_c);
    r.healing_length = fluidsim::nondimensionalize(cp).length;
    r.paraxiality_at_kappa_c = cavity::paraxiality_ratio(r.kappa_c, geom);
    r.depletion_fraction =
        bogoliubov::depletion_fraction(cp, kernel, rc.quantization_area_cm2);
  }
  return r;
}

namespace {
json optional(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
}  // namespace

json to_json(const ParameterReport& r) {
  json j;
  j["mode_index"] = r.mode_index;
  j["m_eff_g"] = r.m_eff;
  j["m_from_frequency_g"] = r.m_from_frequency;
  j["omega_rad_s"] = r.omega;
  j["finesse"] = r.finesse;
  j["tau_cav_s"] = r.tau_cav;
  j["tau_coll_s"] = finite_or_null(r.tau_coll);
  j["collisions_per_ringdown"] = r.collisions_per_ringdown;
  j["e0_sq_erg_cm3"] = r.e0_sq;
  j["n2_esu_cm3_erg"] = r.n2_esu;
  j["n2_cm2_w"] = r.n2_practical;
  j["n2_source"] = r.n2_source == medium::KerrSource::direct ? "direct" : "formula";
  j["implied_dipole_esu_cm"] = optional(r.implied_dipole);
  j["index_shift"] = r.index_shift;
  j["quantization_area_cm2"] = r.quantization_area;
  j["V_cav_cm3"] = r.V_cav;
  j["V0_erg"] = r.V0;
  j["N0"] = r.N0;
  j["mu_erg"] = r.mu;
  j["v_s_cm_s"] = r.v_s;
  j["v_s_from_index_shift_cm_s"] = r.v_s_from_index_shift;
  j["kappa_c_g_cm_s"] = r.kappa_c;
  j["lambda_c_cm"] = optional(r.lambda_c);
  j["healing_length_cm"] = optional(r.healing_length);
  j["paraxiality_at_kappa_c"] = optional(r.paraxiality_at_kappa_c);
  j["depletion_fraction"] = optional(r.depletion_fraction);
  j["condensate_dominant"] = r.condensate_dominant;
  j["fluid_regime"] = r.fluid_regime;
  return j;
}

std::string to_table(const ParameterReport& r) {
  std::ostringstream os;
  char line[160];
  auto row = [&](const char* name, const char* unit, double v) {
    std::snprintf(line, sizeof line, "  %-28s %14.6g  %s\n", name, v, unit);
    os << line;
  };
  auto opt_row = [&](const char* name, const char* unit, const std::optional<double>& v) {
    if (v) {
      row(name, unit, *v);
    } else {
      std::snprintf(line, sizeof line, "  %-28s %14s  %s\n", name, "n/a", unit);
      os << line;
    }
  };
  os << "cavity\n";
  row("mode index", "", static_cast<double>(r.mode_index));
  row("effective mass", "g", r.m_eff);
  row("finesse", "", r.finesse);
  row("ring-down time", "s", r.tau_cav);
  os << "medium\n";
  row("n2", "cm^3/erg", r.n2_esu);
  row("n2", "cm^2/W", r.n2_practical);
  row("E0^2", "erg/cm^3", r.e0_sq);
  row("index shift", "", r.index_shift);
  row("collision time", "s", r.tau_coll);
  row("collisions per ring-down", "", r.collisions_per_ringdown);
  os << "condensate\n";
  row("N0", "", r.N0);
  row("V(0)", "erg", r.V0);
  row("chemical potential", "erg", r.mu);
  row("sound speed", "cm/s", r.v_s);
  row("sound speed c*sqrt(dn)", "cm/s", r.v_s_from_index_shift);
  row("transition momentum", "g cm/s", r.kappa_c);
  opt_row("collective length", "cm", r.lambda_c);
  opt_row("healing length", "cm", r.healing_length);
  opt_row("depletion fraction", "", r.depletion_fraction);
  os << "  fluid regime                 " << (r.fluid_regime ? "yes" : "no") << '\n';
  return os.str();
}

SpectrumSummary summarize(const bogoliubov::DispersionCurve& curve) {
  SpectrumSummary s;
  s.v_s = curve.params.v_s;
  s.kappa_c = bogoliubov::transition_momentum(curve.params, curve.kernel);
  s.lambda_c = s.kappa_c > 0.0 ? bogoliubov::collective_length(s.kappa_c) : INFINITY;
  const auto landau = bogoliubov::landau_critical_velocity(curve);
  s.landau_velocity = landau.velocity;
  s.landau_kappa = landau.kappa;
  try {
    s.v_s_from_curve = bogoliubov::sound_speed_from_curve(curve);
  } catch (const ValidationError&) {
    s.v_s_from_curve = NAN;
  }
  return s;
}

json to_json(const SpectrumSummary& s) {
  return json{{"v_s_cm_s", s.v_s},
              {"v_s_from_curve_cm_s", finite_or_null(s.v_s_from_curve)},
              {"kappa_c_g_cm_s", s.kappa_c},
              {"lambda_c_cm", finite_or_null(s.lambda_c)},
              {"landau_velocity_cm_s", s.landau_velocity},
              {"landau_kappa_g_cm_s", s.landau_kappa}};
}

}  // namespace photonfluid::report
