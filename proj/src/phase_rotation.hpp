#pragma once

#include <complex>
#include <cstddef>

namespace photonfluid::fluidsim::detail {

inline constexpr std::size_t kRotationBlock = 1024;

/// psi[i] *= exp(-i theta[i]) for i < n <= kRotationBlock. Vectorized sin/cos.
void rotate_phase(std::complex<double>* psi, const double* theta, std::size_t n);

}  // namespace photonfluid::fluidsim::detail
