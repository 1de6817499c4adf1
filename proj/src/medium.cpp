#include "photonfluid/medium.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "photonfluid/error.hpp"
#include "photonfluid/units.hpp"

namespace photonfluid::medium {

using units::kCodata;
using units::kPi;

void MediumSpec::validate() const {
  if (!(atom_density >= 0.0) || !std::isfinite(atom_density)) {
    throw ValidationError("medium.atom_density must be non-negative");
  }
  if (n2_direct) {
    if (!std::isfinite(*n2_direct)) {
      throw ValidationError("medium.n2 must be finite");
    }
    return;
  }
  if (detuning == 0.0 || !std::isfinite(detuning)) {
    throw ValidationError("medium.detuning must be nonzero without a direct n2");
  }
  if (!dipole) {
    throw ValidationError("medium needs either n2 or a dipole matrix element");
  }
  if (!(*dipole >= 0.0)) {
    throw ValidationError("medium.dipole must be non-negative");
  }
}

KerrCoefficient grischkowsky_n2(const MediumSpec& spec) {
  spec.validate();
  if (spec.n2_direct) {
    return {*spec.n2_direct, KerrSource::direct};
  }
  const double hbar = kCodata.hbar;
  const double mu2 = *spec.dipole * *spec.dipole;
  const double value = kPi * spec.atom_density * mu2 * mu2 /
                       (hbar * hbar * hbar * spec.detuning * spec.detuning *
                        spec.detuning);
  return {value, KerrSource::formula};
}

double implied_dipole(double n2, double atom_density, double detuning) {
  if (!(atom_density > 0.0) || detuning == 0.0) {
    throw ValidationError("implied dipole needs positive density and nonzero detuning");
  }
  const double hbar = kCodata.hbar;
  const double mu4 = n2 * std::pow(hbar * detuning, 3) / (kPi * atom_density);
  if (!(mu4 >= 0.0)) {
    throw AttractiveMediumError("n2 and detuning have inconsistent signs");
  }
  return std::pow(mu4, 0.25);
}

double quantization_volume(double length_cm, double area_cm2) {
  if (!(length_cm > 0.0) || !(area_cm2 > 0.0)) {
    throw ValidationError("quantization volume needs positive length and area");
  }
  return length_cm * area_cm2;
}

double interaction_strength(double n2, double omega, double v_cav) {
  if (!(v_cav > 0.0)) {
    throw ValidationError("quantization volume must be positive");
  }
  const double photon_energy = kCodata.hbar * omega;
  const double v0 = 8.0 * kPi * photon_energy * photon_energy * n2 / v_cav;
  if (v0 < 0.0) {
    std::ostringstream msg;
    msg << "V(0) = " << v0 << " erg is not repulsive, no stable fluid";
    throw AttractiveMediumError(msg.str());
  }
  return v0;
}

double condensate_number(double e0_sq, double omega, double v_cav) {
  if (!(e0_sq >= 0.0) || !(omega > 0.0) || !(v_cav > 0.0)) {
    throw ValidationError("condensate number needs E0^2 >= 0, omega > 0, V_cav > 0");
  }
  return e0_sq * v_cav / (8.0 * kPi * kCodata.hbar * omega);
}

CondensateParams CondensateParams::make(double m, double N0, double V0,
                                        double v_cav) {
  if (!(m > 0.0)) {
    throw ValidationError("effective mass must be positive");
  }
  if (!(N0 >= 0.0) || !std::isfinite(N0)) {
    throw ValidationError("condensate number must be non-negative");
  }
  if (V0 < 0.0) {
    throw AttractiveMediumError("V(0) must be non-negative");
  }
  if (!(v_cav > 0.0)) {
    throw ValidationError("quantization volume must be positive");
  }
  CondensateParams p;
  p.m = m;
  p.N0 = N0;
  p.V0 = V0;
  p.V_cav = v_cav;
  p.mu_chem = N0 * V0;
  p.v_s = std::sqrt(p.mu_chem / m);
  return p;
}

double chemical_potential(const CondensateParams& p) { return p.N0 * p.V0; }

double sound_speed(const CondensateParams& p) {
  return std::sqrt(chemical_potential(p) / p.m);
}

double chemical_potential_from_index_shift(double omega, double index_shift) {
  return kCodata.hbar * omega * index_shift;
}

double sound_speed_from_index_shift(double index_shift) {
  if (index_shift < 0.0) {
    throw AttractiveMediumError("negative index shift");
  }
  return kCodata.c * std::sqrt(index_shift);
}

bool condensate_dominant(const CondensateParams& p, double threshold) {
  return p.N0 >= threshold;
}

FluidTimescales timescales(const cavity::CavityGeometry& geom, double omega,
                           double n2, double e0_sq, double ratio_threshold) {
  if (!(omega > 0.0) || !(e0_sq >= 0.0)) {
    throw ValidationError("timescales need omega > 0 and E0^2 >= 0");
  }
  FluidTimescales t;
  t.tau_cav = 2.0 * cavity::finesse(geom.reflectivity()) * geom.length() /
              kCodata.c;
  const double rate = 12.0 * omega * std::abs(n2) * e0_sq;
  if (rate > 0.0) {
    t.tau_coll = 1.0 / rate;
    t.collisions_per_ringdown = t.tau_cav / t.tau_coll;
  } else {
    t.tau_coll = std::numeric_limits<double>::infinity();
    t.collisions_per_ringdown = 0.0;
  }
  t.fluid_regime = t.collisions_per_ringdown >= ratio_threshold;
  return t;
}

OperatingPoint operating_point(const cavity::CavityGeometry& geom,
                               const MediumSpec& medium,
                               double intensity_w_cm2, double area_cm2,
                               double ratio_threshold) {
  OperatingPoint op;
  op.omega = cavity::optical_frequency(geom);
  op.e0_sq = units::intensity_to_energy_density(intensity_w_cm2);
  op.n2 = grischkowsky_n2(medium);
  op.area = area_cm2;
  const double v_cav = quantization_volume(geom.length(), area_cm2);
  const double v0 = interaction_strength(op.n2.esu, op.omega, v_cav);
  op.index_shift = op.n2.esu * op.e0_sq;
  const double n0 = condensate_number(op.e0_sq, op.omega, v_cav);
  op.condensate = CondensateParams::make(cavity::effective_mass(geom), n0, v0, v_cav);
  op.times = timescales(geom, op.omega, op.n2.esu, op.e0_sq, ratio_threshold);
  return op;
}

}  // namespace photonfluid::medium
