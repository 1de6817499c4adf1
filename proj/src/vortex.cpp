#include "photonfluid/fluidsim/vortex.hpp"

#include <cmath>

#include "photonfluid/units.hpp"

namespace photonfluid::fluidsim {

namespace {

// Phase of b relative to a, wrapped to (-pi, pi].
double phase_step(const cplx& a, const cplx& b) { return std::arg(b * std::conj(a)); }

int plaquette_winding(const cplx& c00, const cplx& c10, const cplx& c11, const cplx& c01) {
  const double sum = phase_step(c00, c10) + phase_step(c10, c11) +
                     phase_step(c11, c01) + phase_step(c01, c00);
  return static_cast<int>(std::lround(sum / (2.0 * units::kPi)));
}

// Zero of the bilinear interpolant on the unit square, by Newton from the
// centre. Falls back to the centre if the iteration leaves the square.
void bilinear_zero(const cplx& c00, const cplx& c10, const cplx& c11, const cplx& c01,
                   double& s, double& t) {
  s = 0.5;
  t = 0.5;
  for (int it = 0; it < 20; ++it) {
    const cplx f = c00 * (1 - s) * (1 - t) + c10 * s * (1 - t) + c11 * s * t + c01 * (1 - s) * t;
    const cplx fs = (c10 - c00) * (1 - t) + (c11 - c01) * t;
    const cplx ft = (c01 - c00) * (1 - s) + (c11 - c10) * s;
    // Solve the real 2x2 system [Re fs, Re ft; Im fs, Im ft] d = -[Re f; Im f].
    const double det = fs.real() * ft.imag() - ft.real() * fs.imag();
    if (std::abs(det) < 1e-300) break;
    const double ds = -(f.real() * ft.imag() - ft.real() * f.imag()) / det;
    const double dt = -(fs.real() * f.imag() - f.real() * fs.imag()) / det;
    s += ds;
    t += dt;
    if (std::abs(ds) + std::abs(dt) < 1e-12) break;
  }
  if (!(s >= 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0)) {
    s = 0.5;
    t = 0.5;
  }
}

}  // namespace

std::vector<VortexRecord> detect_vortices(const LatticeField& field,
                                          double background_density, double threshold) {
  std::vector<VortexRecord> out;
  const std::size_t nx = field.nx();
  const std::size_t ny = field.ny();
  const double floor = threshold * background_density;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const std::size_t jy = (iy + 1) % ny;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const std::size_t jx = (ix + 1) % nx;
      const cplx& c00 = field(ix, iy);
      const cplx& c10 = field(jx, iy);
      const cplx& c11 = field(jx, jy);
      const cplx& c01 = field(ix, jy);
      if (std::norm(c00) <= floor || std::norm(c10) <= floor || std::norm(c11) <= floor ||
          std::norm(c01) <= floor) {
        continue;
      }
      const int w = plaquette_winding(c00, c10, c11, c01);
      if (w == 0) continue;
      double s = 0.5;
      double t = 0.5;
      bilinear_zero(c00, c10, c11, c01, s, t);
      out.push_back({(static_cast<double>(ix) + s) * field.dx(),
                     (static_cast<double>(iy) + t) * field.dx(), w, field.time()});
    }
  }
  return out;
}

int total_winding(const LatticeField& field) {
  const std::size_t nx = field.nx();
  const std::size_t ny = field.ny();
  int total = 0;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const std::size_t jy = (iy + 1) % ny;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const std::size_t jx = (ix + 1) % nx;
      total += plaquette_winding(field(ix, iy), field(jx, iy), field(jx, jy), field(ix, jy));
    }
  }
  return total;
}

}  // namespace photonfluid::fluidsim
