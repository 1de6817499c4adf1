#pragma once

// Gaussian-CGS constants and the handful of conversions this project needs.
// Everything internal is CGS; SI/practical units only appear at the edges.

#include <string_view>

namespace photonfluid::units {

struct PhysicalConstants {
  double c = 2.99792458e10;        // cm/s
  double hbar = 1.054571817e-27;   // erg s
};

inline constexpr PhysicalConstants kCodata{};
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kErgPerJoule = 1.0e7;

enum class Dimension {
  dimensionless,
  length,            // cm
  area,              // cm^2
  volume,            // cm^3
  time,              // s
  frequency,         // rad/s
  mass,              // g
  momentum,          // g cm/s
  velocity,          // cm/s
  energy,            // erg
  energy_density,    // erg/cm^3 (E0^2 in Gaussian units)
  intensity,         // W/cm^2
  n2_esu,            // cm^3/erg
  n2_practical,      // cm^2/W
};

std::string_view to_string(Dimension d);

/// A value tagged with its dimension. Mixing tags is an error.
class Quantity {
 public:
  constexpr Quantity(double value, Dimension dim) : value_(value), dim_(dim) {}

  constexpr double raw() const { return value_; }
  constexpr Dimension dimension() const { return dim_; }

  /// Value, after checking the tag.
  double in(Dimension expected) const;

  Quantity operator+(const Quantity& rhs) const;
  Quantity operator-(const Quantity& rhs) const;
  Quantity operator*(double s) const { return {value_ * s, dim_}; }
  Quantity operator/(double s) const { return {value_ / s, dim_}; }
  bool operator<(const Quantity& rhs) const;

 private:
  double value_;
  Dimension dim_;
};

// Kerr coefficient: esu (response to E0^2) <-> practical (response to W/cm^2).
// n2[cm^2/W] = n2[cm^3/erg] * 8 pi 1e7 / c
double convert_n2_esu_to_practical(double n2_esu);
double convert_n2_practical_to_esu(double n2_practical);
Quantity convert_n2_esu_to_practical(const Quantity& n2_esu);
Quantity convert_n2_practical_to_esu(const Quantity& n2_practical);

// Traveling-wave relation I = c E0^2 / 8 pi, with I given in W/cm^2.
double intensity_to_energy_density(double intensity_w_cm2);
double energy_density_to_intensity(double e0_sq);
Quantity intensity_to_energy_density(const Quantity& intensity);

}  // namespace photonfluid::units
