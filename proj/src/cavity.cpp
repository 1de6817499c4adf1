#include "photonfluid/cavity.hpp"

#include <cmath>
#include <sstream>

#include "photonfluid/error.hpp"
#include "photonfluid/units.hpp"

namespace photonfluid::cavity {

using units::kCodata;
using units::kPi;

CavityGeometry CavityGeometry::make(double length_cm, double reflectivity,
                                    double wavelength_cm,
                                    std::optional<long long> mode_index) {
  if (!(length_cm > 0.0) || !std::isfinite(length_cm)) {
    throw ValidationError("cavity.length_cm must be positive");
  }
  if (!(reflectivity > 0.0 && reflectivity < 1.0)) {
    throw ValidationError("cavity.reflectivity must lie in (0, 1)");
  }
  if (!(wavelength_cm > 0.0) || !std::isfinite(wavelength_cm)) {
    throw ValidationError("cavity.wavelength_cm must be positive");
  }
  long long n = 0;
  if (mode_index) {
    if (*mode_index < 1) {
      throw ValidationError("cavity.mode_index must be >= 1");
    }
    n = *mode_index;
  } else {
    n = std::max<long long>(1, std::llround(2.0 * length_cm / wavelength_cm));
  }
  CavityGeometry geom(length_cm, reflectivity, wavelength_cm, n);
  if (!geom.resonance_consistent()) {
    std::ostringstream msg;
    msg << "mode index " << n << " is off the longitudinal resonance 2L/lambda = "
        << 2.0 * length_cm / wavelength_cm;
    warn(msg.str());
  }
  return geom;
}

double CavityGeometry::resonance_mismatch() const {
  return std::abs(static_cast<double>(mode_index_) - 2.0 * length_ / wavelength_);
}

double CavityGeometry::longitudinal_momentum() const {
  return kCodata.hbar * static_cast<double>(mode_index_) * kPi / length_;
}

double effective_mass(const CavityGeometry& geom) {
  return geom.longitudinal_momentum() / kCodata.c;
}

double optical_frequency(const CavityGeometry& geom) {
  return 2.0 * kPi * kCodata.c / geom.wavelength();
}

double effective_mass_from_frequency(const CavityGeometry& geom) {
  return kCodata.hbar * optical_frequency(geom) / (kCodata.c * kCodata.c);
}

FreeDispersion free_dispersion(const CavityGeometry& geom) {
  const double m = effective_mass(geom);
  return {m, optical_frequency(geom), m * kCodata.c * kCodata.c};
}

double free_kinetic_energy(double p_perp, double mass) {
  if (!(mass > 0.0)) {
    throw ValidationError("mass must be positive");
  }
  return p_perp * p_perp / (2.0 * mass);
}

double exact_kinetic_energy(double p_perp, double mass) {
  if (!(mass > 0.0)) {
    throw ValidationError("mass must be positive");
  }
  const double mc = mass * kCodata.c;
  return kCodata.c * p_perp * p_perp / (std::hypot(p_perp, mc) + mc);
}

double paraxiality_ratio(double p_perp, const CavityGeometry& geom) {
  return p_perp / geom.longitudinal_momentum();
}

double finesse(double reflectivity) {
  if (!(reflectivity > 0.0 && reflectivity < 1.0)) {
    throw ValidationError("reflectivity must lie in (0, 1)");
  }
  return kPi * std::sqrt(reflectivity) / (1.0 - reflectivity);
}

}  // namespace photonfluid::cavity
