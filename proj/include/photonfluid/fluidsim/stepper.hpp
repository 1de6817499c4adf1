#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "photonfluid/fluidsim/lattice.hpp"

namespace photonfluid::fluidsim {

enum class FftPlanner {
  estimate,  // heuristic plan, identical across processes
  measure,   // timed plan, faster, may differ run to run
};

/// Localized oscillating potential: amplitude * sin(omega t) * profile(x).
struct PointDrive {
  std::vector<double> profile;
  double amplitude = 0.0;
  double frequency = 0.0;
};

/// Absorbing layer: psi relaxes to `target` at local rate `rate`.
struct Sponge {
  std::vector<double> rate;
  std::vector<cplx> target;
};

/// Everything besides the kinetic term, in dimensionless units.
struct Hamiltonian {
  std::span<const double> potential;             // U(x); empty means zero
  std::function<double(double)> potential_ramp;  // multiplies U at time t
  double chemical_shift = 0.0;                   // mu subtracted from the phase
  const PointDrive* drive = nullptr;
  const Sponge* sponge = nullptr;
};

/// Largest admissible step on spacing dx: min(0.1, dx^2 / pi).
double max_stable_dt(double dx);

/// Strang split-step Fourier integrator: half kinetic step (exact in k-space),
/// full pointwise nonlinear + potential phase rotation, half kinetic step.
/// Owns its FFT plans and work buffer; one instance per grid, not shareable
/// between threads.
class SplitStepper {
 public:
  SplitStepper(std::size_t nx, std::size_t ny, double dx,
               FftPlanner planner = FftPlanner::estimate);
  ~SplitStepper();
  SplitStepper(const SplitStepper&) = delete;
  SplitStepper& operator=(const SplitStepper&) = delete;
  SplitStepper(SplitStepper&&) noexcept;
  SplitStepper& operator=(SplitStepper&&) noexcept;

  /// One Strang step. Throws ValidationError if dt exceeds max_stable_dt and
  /// NumericalError if the field stops being finite.
  void step(LatticeField& field, double dt, const Hamiltonian& h = {});

  /// `steps` consecutive Strang steps with adjacent kinetic half-steps fused.
  /// `observer`, if given, sees the field after every full step (the fused
  /// stream is unfused at that point, so observing costs an extra FFT pair).
  void advance(LatticeField& field, double dt, std::size_t steps,
               const Hamiltonian& h = {},
               const std::function<void(const LatticeField&)>& observer = {});

  /// Integral of 1/2 |grad psi|^2 + 1/2 |psi|^4 + (U - mu) |psi|^2.
  double energy(const LatticeField& field, const Hamiltonian& h = {}) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace photonfluid::fluidsim
