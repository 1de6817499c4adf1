#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "photonfluid/bogoliubov.hpp"
#include "photonfluid/cavity.hpp"
#include "photonfluid/fluidsim/scenarios.hpp"
#include "photonfluid/medium.hpp"

namespace photonfluid::config {

using json = nlohmann::json;

/// Transverse quantization area used when a config does not give one: the
/// area at which 40 W/cm^2 in a 2 cm cavity at 780 nm holds 8e11 photons.
inline constexpr double kDefaultQuantizationAreaCm2 = 76.35;

struct KernelConfig {
  enum class Kind { contact, roton, tabulated };
  Kind kind = Kind::contact;
  // Roton dip, in units of the contact-kernel kappa_c.
  double dip_depth = 0.0;
  double dip_center_over_kc = 1.0;
  double dip_width_over_kc = 0.1;
  // Tabulated (kappa / kappa_c, V / V(0)) pairs.
  std::vector<std::pair<double, double>> table;
};

struct SpectrumConfig {
  double kappa_min_over_kc = bogoliubov::kDefaultKappaMinOverKc;
  double kappa_max_over_kc = bogoliubov::kDefaultKappaMaxOverKc;
  int points = bogoliubov::kDefaultCurvePoints;
};

struct ScenarioConfig {
  enum class Kind { dispersion_probe, ripple, obstacle_flow };
  Kind kind = Kind::dispersion_probe;
  std::vector<double> k_list{0.1, 0.3, 1.0, 3.0, 10.0};
  fluidsim::ModeProbeOptions probe;
  fluidsim::RippleOptions ripple;
  fluidsim::ObstacleOptions obstacle;
  double snapshot_stride = 0.0;  // 0 disables periodic snapshots
  // obstacle sweep
  double sweep_low = 0.2;
  double sweep_high = 0.9;
  double sweep_tolerance = 0.05;
};

struct Thresholds {
  double condensate_min = medium::kDefaultCondensateThreshold;
  double fluid_ratio_min = medium::kDefaultFluidRatioThreshold;
};

struct RunConfig {
  cavity::CavityGeometry cavity;
  medium::MediumSpec medium;
  double intensity_w_cm2 = 0.0;
  double quantization_area_cm2 = kDefaultQuantizationAreaCm2;
  KernelConfig kernel;
  SpectrumConfig spectrum;
  std::optional<ScenarioConfig> scenario;
  Thresholds thresholds;
  std::uint64_t seed = 0;
  json source;  // the merged document this was parsed from
};

/// Reads JSON, allowing // and /* */ comments.
json load_json(const std::filesystem::path& path);
json parse_json(const std::string& text);

/// Applies "dotted.path=value"; value is parsed as JSON when possible and kept
/// as a string otherwise. Missing intermediate objects are created.
void apply_override(json& doc, const std::string& assignment);

/// Validates every section; errors name the offending field.
RunConfig parse(const json& doc);

/// FNV-1a 64 of the canonical dump, as 16 hex digits.
std::string config_hash(const json& doc);

/// Interaction kernel for a condensate, scaled by the contact kappa_c.
bogoliubov::InteractionKernel build_kernel(const KernelConfig& k,
                                           const medium::CondensateParams& p);

}  // namespace photonfluid::config
