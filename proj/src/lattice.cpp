#include "photonfluid/fluidsim/lattice.hpp"

#include <cmath>

#include "photonfluid/error.hpp"
#include "photonfluid/units.hpp"

namespace photonfluid::fluidsim {

Scales nondimensionalize(const medium::CondensateParams& params) {
  if (!(params.mu_chem > 0.0) || !(params.v_s > 0.0)) {
    throw ValidationError("nondimensionalization needs a positive chemical potential");
  }
  const double hbar = units::kCodata.hbar;
  return {hbar / (params.m * params.v_s), hbar / params.mu_chem, params.v_s,
          params.mu_chem};
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

LatticeField::LatticeField(std::size_t nx, std::size_t ny, double dx, cplx fill)
    : nx_(nx), ny_(ny), dx_(dx) {
  if (!is_power_of_two(nx) || !is_power_of_two(ny)) {
    throw ValidationError("lattice dimensions must be powers of two");
  }
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw ValidationError("lattice spacing must be positive");
  }
  data_.assign(nx * ny, fill);
}

double LatticeField::norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return sum * dx_ * dx_;
}

double wavenumber(std::size_t i, std::size_t n, double dx) {
  const auto signed_index = i < n / 2 ? static_cast<double>(i)
                                      : static_cast<double>(i) - static_cast<double>(n);
  return 2.0 * units::kPi * signed_index / (static_cast<double>(n) * dx);
}

}  // namespace photonfluid::fluidsim
