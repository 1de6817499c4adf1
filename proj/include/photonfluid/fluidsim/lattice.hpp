#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "photonfluid/medium.hpp"

namespace photonfluid::fluidsim {

using cplx = std::complex<double>;

/// Healing-length units for i dpsi/dt = [-1/2 lap + |psi|^2 + U] psi with
/// background density 1. One dimensionless length is xi = hbar / (m v_s).
struct Scales {
  double length;    // cm, healing length xi
  double time;      // s, hbar / mu
  double velocity;  // cm/s, v_s
  double energy;    // erg, mu

  double length_to_physical(double x) const { return x * length; }
  double length_to_dimensionless(double x_cm) const { return x_cm / length; }
  double time_to_physical(double t) const { return t * time; }
  double time_to_dimensionless(double t_s) const { return t_s / time; }
  double velocity_to_physical(double v) const { return v * velocity; }
  double velocity_to_dimensionless(double v_cm_s) const { return v_cm_s / velocity; }
};

/// Requires mu > 0.
Scales nondimensionalize(const medium::CondensateParams& params);

bool is_power_of_two(std::size_t n);

/// Complex field on an nx-by-ny periodic lattice, row-major (y rows, x columns).
class LatticeField {
 public:
  /// nx, ny must be powers of two and dx > 0.
  LatticeField(std::size_t nx, std::size_t ny, double dx, cplx fill = cplx(0.0, 0.0));

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t size() const { return data_.size(); }
  double dx() const { return dx_; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  double length_x() const { return static_cast<double>(nx_) * dx_; }
  double length_y() const { return static_cast<double>(ny_) * dx_; }

  std::size_t index(std::size_t ix, std::size_t iy) const { return iy * nx_ + ix; }
  cplx& operator()(std::size_t ix, std::size_t iy) { return data_[index(ix, iy)]; }
  const cplx& operator()(std::size_t ix, std::size_t iy) const { return data_[index(ix, iy)]; }

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  /// sum |psi|^2 dx^2
  double norm() const;

 private:
  std::size_t nx_;
  std::size_t ny_;
  double dx_;
  double time_ = 0.0;
  std::vector<cplx> data_;
};

/// Angular wavenumber of FFT bin `i` on an n-point axis of spacing dx.
double wavenumber(std::size_t i, std::size_t n, double dx);

}  // namespace photonfluid::fluidsim
