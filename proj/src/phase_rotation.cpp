// Built with -ffast-math so glibc's vector sin/cos are used; nothing else
// belongs in this file.
#include "phase_rotation.hpp"

#include <math.h>

namespace photonfluid::fluidsim::detail {

__attribute__((target_clones("avx2", "default")))
void rotate_phase(std::complex<double>* psi, const double* theta, std::size_t n) {
  double c[kRotationBlock];
  double s[kRotationBlock];
  // separate loops: a fused sincos has no vector variant
#pragma omp simd
  for (std::size_t i = 0; i < n; ++i) c[i] = ::cos(theta[i]);
#pragma omp simd
  for (std::size_t i = 0; i < n; ++i) s[i] = ::sin(theta[i]);
  double* z = reinterpret_cast<double*>(psi);
#pragma omp simd
  for (std::size_t i = 0; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    z[2 * i] = re * c[i] + im * s[i];
    z[2 * i + 1] = im * c[i] - re * s[i];
  }
}

}  // namespace photonfluid::fluidsim::detail
