#include "photonfluid/fluidsim/stepper.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <string>

#include "photonfluid/error.hpp"
#include "photonfluid/units.hpp"
#include "phase_rotation.hpp"

namespace photonfluid::fluidsim {

namespace {

// FFTW's planner is not reentrant.
std::mutex g_planner_mutex;

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n)
      : ptr(static_cast<cplx*>(fftw_malloc(sizeof(cplx) * n))) {
    if (!ptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  fftw_complex* raw() { return reinterpret_cast<fftw_complex*>(ptr); }
  cplx* ptr;
};

}  // namespace

double max_stable_dt(double dx) {
  return std::min(0.1, dx * dx / units::kPi);
}

struct SplitStepper::Impl {
  std::size_t nx;
  std::size_t ny;
  std::size_t n;
  double dx;
  FftwBuffer work;
  mutable FftwBuffer scratch;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  // |k|^2 / 2 separates, so the kinetic phase is a product of per-axis factors.
  std::vector<double> half_kx2;
  std::vector<double> half_ky2;

  struct PhaseCache {
    double h = 0.0;
    std::vector<cplx> fx;  // carries the 1/n of the inverse transform
    std::vector<cplx> fy;
  };
  PhaseCache cache[2];
  int cache_next = 0;

  Impl(std::size_t nx_, std::size_t ny_, double dx_, FftPlanner planner)
      : nx(nx_), ny(ny_), n(nx_ * ny_), dx(dx_), work(n), scratch(n) {
    const unsigned flags = planner == FftPlanner::measure ? FFTW_MEASURE : FFTW_ESTIMATE;
    {
      std::lock_guard lock(g_planner_mutex);
      forward = fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx), work.raw(),
                                 work.raw(), FFTW_FORWARD, flags);
      backward = fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx), work.raw(),
                                  work.raw(), FFTW_BACKWARD, flags);
    }
    if (!forward || !backward) throw NumericalError("FFTW plan creation failed");
    half_kx2.resize(nx);
    half_ky2.resize(ny);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double kx = wavenumber(ix, nx, dx);
      half_kx2[ix] = 0.5 * kx * kx;
    }
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double ky = wavenumber(iy, ny, dx);
      half_ky2[iy] = 0.5 * ky * ky;
    }
  }

  ~Impl() {
    std::lock_guard lock(g_planner_mutex);
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }

  const PhaseCache& kinetic_factors(double h) {
    for (auto& c : cache) {
      if (c.h == h && !c.fx.empty()) return c;
    }
    auto& slot = cache[cache_next];
    cache_next = (cache_next + 1) % 2;
    slot.h = h;
    const double inv_n = 1.0 / static_cast<double>(n);
    slot.fx.resize(nx);
    slot.fy.resize(ny);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double theta = half_kx2[ix] * h;
      slot.fx[ix] = cplx(std::cos(theta), -std::sin(theta)) * inv_n;
    }
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double theta = half_ky2[iy] * h;
      slot.fy[iy] = cplx(std::cos(theta), -std::sin(theta));
    }
    return slot;
  }

  void kinetic(double h) {
    const auto& f = kinetic_factors(h);
    fftw_execute(forward);
    cplx* psi = work.ptr;
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const cplx fy = f.fy[iy];
      cplx* row = psi + iy * nx;
      for (std::size_t ix = 0; ix < nx; ++ix) row[ix] *= fy * f.fx[ix];
    }
    fftw_execute(backward);
  }

  void pointwise(double dt, double t_mid, const Hamiltonian& h) {
    cplx* psi = work.ptr;
    const bool has_potential = !h.potential.empty();
    const double ramp = has_potential && h.potential_ramp ? h.potential_ramp(t_mid) : 1.0;
    const double* drive_profile = nullptr;
    double drive_value = 0.0;
    if (h.drive) {
      drive_profile = h.drive->profile.data();
      drive_value = h.drive->amplitude * std::sin(h.drive->frequency * t_mid);
    }
    double check = 0.0;
    double theta[detail::kRotationBlock];
    for (std::size_t start = 0; start < n; start += detail::kRotationBlock) {
      const std::size_t len = std::min(detail::kRotationBlock, n - start);
      for (std::size_t j = 0; j < len; ++j) {
        const std::size_t i = start + j;
        double local = std::norm(psi[i]) - h.chemical_shift;
        if (has_potential) local += ramp * h.potential[i];
        if (drive_profile) local += drive_value * drive_profile[i];
        theta[j] = local * dt;
        check += local;
      }
      detail::rotate_phase(psi + start, theta, len);
    }
    if (h.sponge) {
      const auto& rate = h.sponge->rate;
      const auto& target = h.sponge->target;
      for (std::size_t i = 0; i < n; ++i) {
        if (rate[i] > 0.0) {
          psi[i] = target[i] + (psi[i] - target[i]) * std::exp(-rate[i] * dt);
        }
      }
    }
    if (!std::isfinite(check)) {
      throw NumericalError("field became non-finite at t = " + std::to_string(t_mid));
    }
  }

  void check_compatible(const LatticeField& field, const Hamiltonian& h) const {
    if (field.nx() != nx || field.ny() != ny || field.dx() != dx) {
      throw ValidationError("field grid does not match the stepper grid");
    }
    if (!h.potential.empty() && h.potential.size() != n) {
      throw ValidationError("potential size does not match the grid");
    }
    if (h.drive && h.drive->profile.size() != n) {
      throw ValidationError("drive profile size does not match the grid");
    }
    if (h.sponge && (h.sponge->rate.size() != n || h.sponge->target.size() != n)) {
      throw ValidationError("sponge size does not match the grid");
    }
  }
};

SplitStepper::SplitStepper(std::size_t nx, std::size_t ny, double dx, FftPlanner planner) {
  if (!is_power_of_two(nx) || !is_power_of_two(ny) || !(dx > 0.0)) {
    throw ValidationError("stepper grid must be power-of-two sized with dx > 0");
  }
  impl_ = std::make_unique<Impl>(nx, ny, dx, planner);
}

SplitStepper::~SplitStepper() = default;
SplitStepper::SplitStepper(SplitStepper&&) noexcept = default;
SplitStepper& SplitStepper::operator=(SplitStepper&&) noexcept = default;

void SplitStepper::step(LatticeField& field, double dt, const Hamiltonian& h) {
  advance(field, dt, 1, h);
}

void SplitStepper::advance(LatticeField& field, double dt, std::size_t steps,
                           const Hamiltonian& h,
                           const std::function<void(const LatticeField&)>& observer) {
  if (!(dt > 0.0) || dt > max_stable_dt(impl_->dx) * (1.0 + 1e-12)) {
    throw ValidationError("dt = " + std::to_string(dt) +
                          " outside (0, min(0.1, dx^2/pi)]");
  }
  impl_->check_compatible(field, h);
  if (steps == 0) return;

  auto& w = *impl_;
  std::memcpy(w.work.ptr, field.data().data(), sizeof(cplx) * w.n);
  double t = field.time();

  if (observer) {
    for (std::size_t s = 0; s < steps; ++s) {
      w.kinetic(0.5 * dt);
      w.pointwise(dt, t + 0.5 * dt, h);
      w.kinetic(0.5 * dt);
      t += dt;
      std::memcpy(field.data().data(), w.work.ptr, sizeof(cplx) * w.n);
      field.set_time(t);
      observer(field);
    }
    return;
  }

  w.kinetic(0.5 * dt);
  for (std::size_t s = 0; s < steps; ++s) {
    w.pointwise(dt, t + 0.5 * dt, h);
    w.kinetic(s + 1 == steps ? 0.5 * dt : dt);
    t += dt;
  }
  std::memcpy(field.data().data(), w.work.ptr, sizeof(cplx) * w.n);
  field.set_time(t);
}

double SplitStepper::energy(const LatticeField& field, const Hamiltonian& h) const {
  impl_->check_compatible(field, h);
  const auto& w = *impl_;
  std::memcpy(w.scratch.ptr, field.data().data(), sizeof(cplx) * w.n);
  fftw_execute_dft(w.forward, w.scratch.raw(), w.scratch.raw());
  double kinetic = 0.0;
  for (std::size_t iy = 0; iy < w.ny; ++iy) {
    for (std::size_t ix = 0; ix < w.nx; ++ix) {
      kinetic += (w.half_kx2[ix] + w.half_ky2[iy]) * std::norm(w.scratch.ptr[iy * w.nx + ix]);
    }
  }
  kinetic /= static_cast<double>(w.n);

  const double ramp =
      !h.potential.empty() && h.potential_ramp ? h.potential_ramp(field.time()) : 1.0;
  double local = 0.0;
  const auto& psi = field.data();
  for (std::size_t i = 0; i < w.n; ++i) {
    const double rho = std::norm(psi[i]);
    double u = -h.chemical_shift;
    if (!h.potential.empty()) u += ramp * h.potential[i];
    local += 0.5 * rho * rho + u * rho;
  }
  return (kinetic + local) * w.dx * w.dx;
}

}  // namespace photonfluid::fluidsim
