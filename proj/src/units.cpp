#include "photonfluid/units.hpp"

#include <cmath>
#include <iostream>
#include <mutex>
#include <string>

#include "photonfluid/error.hpp"

namespace photonfluid {

namespace {
std::mutex g_sink_mutex;
WarningSink g_sink;
}  // namespace

void set_warning_sink(WarningSink sink) {
  std::lock_guard lock(g_sink_mutex);
  g_sink = std::move(sink);
}

void warn(const std::string& message) {
  std::lock_guard lock(g_sink_mutex);
  if (g_sink) {
    g_sink(message);
  } else {
    std::cerr << "[warn] " << message << '\n';
  }
}

}  // namespace photonfluid

namespace photonfluid::units {

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::dimensionless: return "dimensionless";
    case Dimension::length: return "cm";
    case Dimension::area: return "cm^2";
    case Dimension::volume: return "cm^3";
    case Dimension::time: return "s";
    case Dimension::frequency: return "rad/s";
    case Dimension::mass: return "g";
    case Dimension::momentum: return "g cm/s";
    case Dimension::velocity: return "cm/s";
    case Dimension::energy: return "erg";
    case Dimension::energy_density: return "erg/cm^3";
    case Dimension::intensity: return "W/cm^2";
    case Dimension::n2_esu: return "cm^3/erg";
    case Dimension::n2_practical: return "cm^2/W";
  }
  return "?";
}

namespace {
void require_same(Dimension a, Dimension b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::string(to_string(a)) +
                         " vs " + std::string(to_string(b)));
  }
}

// 8 pi 1e7 / c : esu field-squared response -> intensity response.
double esu_to_practical_factor() {
  return 8.0 * kPi * kErgPerJoule / kCodata.c;
}
}  // namespace

double Quantity::in(Dimension expected) const {
  require_same(dim_, expected);
  return value_;
}

Quantity Quantity::operator+(const Quantity& rhs) const {
  require_same(dim_, rhs.dim_);
  return {value_ + rhs.value_, dim_};
}

Quantity Quantity::operator-(const Quantity& rhs) const {
  require_same(dim_, rhs.dim_);
  return {value_ - rhs.value_, dim_};
}

bool Quantity::operator<(const Quantity& rhs) const {
  require_same(dim_, rhs.dim_);
  return value_ < rhs.value_;
}

double convert_n2_esu_to_practical(double n2_esu) {
  return n2_esu * esu_to_practical_factor();
}

double convert_n2_practical_to_esu(double n2_practical) {
  return n2_practical / esu_to_practical_factor();
}

Quantity convert_n2_esu_to_practical(const Quantity& n2_esu) {
  return {convert_n2_esu_to_practical(n2_esu.in(Dimension::n2_esu)),
          Dimension::n2_practical};
}

Quantity convert_n2_practical_to_esu(const Quantity& n2_practical) {
  return {convert_n2_practical_to_esu(n2_practical.in(Dimension::n2_practical)),
          Dimension::n2_esu};
}

double intensity_to_energy_density(double intensity_w_cm2) {
  if (!(intensity_w_cm2 >= 0.0)) {
    throw ValidationError("intensity must be non-negative, got " +
                          std::to_string(intensity_w_cm2));
  }
  return 8.0 * kPi * intensity_w_cm2 * kErgPerJoule / kCodata.c;
}

double energy_density_to_intensity(double e0_sq) {
  if (!(e0_sq >= 0.0)) {
    throw ValidationError("field energy density must be non-negative");
  }
  return e0_sq * kCodata.c / (8.0 * kPi * kErgPerJoule);
}

Quantity intensity_to_energy_density(const Quantity& intensity) {
  return {intensity_to_energy_density(intensity.in(Dimension::intensity)),
          Dimension::energy_density};
}

}  // namespace photonfluid::units
