#pragma once

#include <optional>
#include <string>

#include "photonfluid/bogoliubov.hpp"
#include "photonfluid/config.hpp"
#include "photonfluid/medium.hpp"

namespace photonfluid::report {

/// The cavity/medium/condensate numbers for one configuration.
struct ParameterReport {
  long long mode_index = 0;
  double m_eff = 0.0;
  double m_from_frequency = 0.0;
  double omega = 0.0;
  double finesse = 0.0;
  double tau_cav = 0.0;
  double tau_coll = 0.0;
  double collisions_per_ringdown = 0.0;
  double e0_sq = 0.0;
  double n2_esu = 0.0;
  double n2_practical = 0.0;
  medium::KerrSource n2_source = medium::KerrSource::direct;
  std::optional<double> implied_dipole;
  double index_shift = 0.0;
  double quantization_area = 0.0;
  double V_cav = 0.0;
  double V0 = 0.0;
  double N0 = 0.0;
  double mu = 0.0;
  double v_s = 0.0;
  double v_s_from_index_shift = 0.0;
  double kappa_c = 0.0;
  std::optional<double> lambda_c;
  std::optional<double> healing_length;
  std::optional<double> paraxiality_at_kappa_c;
  std::optional<double> depletion_fraction;
  bool condensate_dominant = false;
  bool fluid_regime = false;

  medium::OperatingPoint point;
};

ParameterReport make_parameter_report(const config::RunConfig& rc);

config::json to_json(const ParameterReport& r);
std::string to_table(const ParameterReport& r);

struct SpectrumSummary {
  double v_s = 0.0;            // sqrt(mu / m)
  double v_s_from_curve = 0.0;
  double kappa_c = 0.0;
  double lambda_c = 0.0;
  double landau_velocity = 0.0;
  double landau_kappa = 0.0;
};

SpectrumSummary summarize(const bogoliubov::DispersionCurve& curve);
config::json to_json(const SpectrumSummary& s);

}  // namespace photonfluid::report
