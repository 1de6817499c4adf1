#pragma once

#include <optional>

namespace photonfluid::cavity {

/// Transverse momentum ratio p / (hbar n pi / L) above which the quadratic
/// kinetic energy is flagged as leaving the paraxial regime.
inline constexpr double kParaxialityWarnThreshold = 0.1;

/// Planar Fabry-Perot resonator driven on a single longitudinal mode.
class CavityGeometry {
 public:
  /// Validates L > 0, 0 < R < 1, lambda > 0. When `mode_index` is absent it is
  /// 2L/lambda rounded to the nearest integer; an explicit index that misses
  /// the resonance condition by more than one unit triggers a warning.
  static CavityGeometry make(double length_cm, double reflectivity,
                             double wavelength_cm,
                             std::optional<long long> mode_index = std::nullopt);

  double length() const { return length_; }
  double reflectivity() const { return reflectivity_; }
  double wavelength() const { return wavelength_; }
  long long mode_index() const { return mode_index_; }

  /// |n - 2L/lambda|
  double resonance_mismatch() const;
  bool resonance_consistent() const { return resonance_mismatch() <= 1.0; }

  /// Longitudinal wavenumber times hbar: hbar n pi / L.
  double longitudinal_momentum() const;

 private:
  CavityGeometry(double L, double R, double lambda, long long n)
      : length_(L), reflectivity_(R), wavelength_(lambda), mode_index_(n) {}

  double length_;
  double reflectivity_;
  double wavelength_;
  long long mode_index_;
};

struct FreeDispersion {
  double m_eff;        // g
  double omega;        // rad/s
  double rest_energy;  // erg, m c^2
};

/// hbar n pi / (L c)
double effective_mass(const CavityGeometry& geom);
/// hbar omega / c^2, the approximation that holds on resonance.
double effective_mass_from_frequency(const CavityGeometry& geom);
double optical_frequency(const CavityGeometry& geom);
FreeDispersion free_dispersion(const CavityGeometry& geom);

/// Nonrelativistic transverse kinetic energy p^2 / 2m.
double free_kinetic_energy(double p_perp, double mass);
/// c sqrt(p^2 + m^2 c^2) - m c^2, evaluated without cancellation.
double exact_kinetic_energy(double p_perp, double mass);

double paraxiality_ratio(double p_perp, const CavityGeometry& geom);

/// pi sqrt(R) / (1 - R)
double finesse(double reflectivity);

}  // namespace photonfluid::cavity
