#pragma once

#include <optional>

#include "photonfluid/cavity.hpp"

namespace photonfluid::medium {

/// Two-level atomic vapour acting as a fast Kerr medium.
///
/// Sign convention: `detuning` is omega_atom - omega_laser, so red detuning is
/// positive and gives n2 > 0 (repulsive photon-photon interaction).
struct MediumSpec {
  double atom_density = 0.0;            // cm^-3
  std::optional<double> dipole;         // esu cm
  double detuning = 0.0;                // rad/s
  std::optional<double> n2_direct;      // cm^3/erg, overrides the formula

  void validate() const;
};

enum class KerrSource { formula, direct };

struct KerrCoefficient {
  double esu;  // cm^3/erg
  KerrSource source;
};

/// pi N mu^4 / (hbar^3 Delta^3), or the directly supplied value.
KerrCoefficient grischkowsky_n2(const MediumSpec& spec);

/// Dipole matrix element that makes the two-level formula return `n2`.
double implied_dipole(double n2, double atom_density, double detuning);

/// L * A
double quantization_volume(double length_cm, double area_cm2);

/// V(0) = 8 pi (hbar omega)^2 n2 / V_cav. Throws AttractiveMediumError for n2 < 0.
double interaction_strength(double n2, double omega, double v_cav);

/// N0 = E0^2 V_cav / (8 pi hbar omega)
double condensate_number(double e0_sq, double omega, double v_cav);

struct CondensateParams {
  double m = 0.0;        // g
  double N0 = 0.0;
  double V0 = 0.0;       // erg
  double mu_chem = 0.0;  // erg
  double v_s = 0.0;      // cm/s
  double V_cav = 0.0;    // cm^3

  /// Builds the bundle with mu = N0 V0 and v_s = sqrt(mu / m).
  static CondensateParams make(double m, double N0, double V0, double v_cav);
};

double chemical_potential(const CondensateParams& p);
double sound_speed(const CondensateParams& p);

/// mu = hbar omega dn, equivalent to N0 V0 through the field/photon-number map.
double chemical_potential_from_index_shift(double omega, double index_shift);
/// v_s = c sqrt(dn), valid when m = hbar omega / c^2.
double sound_speed_from_index_shift(double index_shift);

inline constexpr double kDefaultCondensateThreshold = 1e6;
inline constexpr double kDefaultFluidRatioThreshold = 100.0;

bool condensate_dominant(const CondensateParams& p,
                         double threshold = kDefaultCondensateThreshold);

struct FluidTimescales {
  double tau_cav = 0.0;                  // s
  double tau_coll = 0.0;                 // s, +inf without nonlinearity
  double collisions_per_ringdown = 0.0;
  bool fluid_regime = false;
};

/// tau_cav = 2 F L / c, tau_coll = 1 / (12 omega n2 E0^2).
FluidTimescales timescales(const cavity::CavityGeometry& geom, double omega,
                           double n2, double e0_sq,
                           double ratio_threshold = kDefaultFluidRatioThreshold);

/// Everything that follows from cavity + medium + drive intensity + area.
struct OperatingPoint {
  double omega = 0.0;
  double e0_sq = 0.0;        // erg/cm^3
  KerrCoefficient n2{0.0, KerrSource::direct};
  double index_shift = 0.0;  // n2 E0^2
  double area = 0.0;         // cm^2
  CondensateParams condensate;
  FluidTimescales times;
};

OperatingPoint operating_point(
    const cavity::CavityGeometry& geom, const MediumSpec& medium,
    double intensity_w_cm2, double area_cm2,
    double ratio_threshold = kDefaultFluidRatioThreshold);

}  // namespace photonfluid::medium
