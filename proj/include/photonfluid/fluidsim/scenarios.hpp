#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "photonfluid/fluidsim/lattice.hpp"
#include "photonfluid/fluidsim/stepper.hpp"
#include "photonfluid/fluidsim/vortex.hpp"

namespace photonfluid::fluidsim {

/// sqrt(k^2 + k^4/4): contact-kernel Bogoliubov frequency in healing units.
double bogoliubov_frequency(double k);

// ---------------------------------------------------------------------------
// Dispersion probe

struct ModeProbeOptions {
  double epsilon = 1e-3;     // seed amplitude of the cos(kx) perturbation
  double periods = 16.0;     // record length in units of the slowest period bound
  double phase_step = 0.02;  // omega_max * dt
  FftPlanner planner = FftPlanner::estimate;
};

struct DispersionSample {
  double k;
  double omega;           // measured
  double omega_analytic;  // sqrt(k^2 + k^4/4)
  double relative_error;
  bool resolved;
};

/// Seeds psi = 1 + eps cos(kx) on the given grid, evolves in the frame rotating
/// at mu = 1, and reads the frequency of the k-component of the density from a
/// Hann-windowed DFT peak with quadratic interpolation. `k` must be an integer
/// multiple of 2 pi / (nx dx).
DispersionSample measure_mode_frequency(double k, std::size_t nx, std::size_t ny, double dx,
                                        const ModeProbeOptions& opts = {});

/// One probe per k, each in a box holding exactly one wavelength on 32x4 points.
std::vector<DispersionSample> measure_dispersion(const std::vector<double>& k_list,
                                                 const ModeProbeOptions& opts = {});

// ---------------------------------------------------------------------------
// Ripple source

inline constexpr double kMaxPhononDriveFrequency = 0.3;
inline constexpr double kMaxLinearDriveAmplitude = 1e-2;

struct RippleOptions {
  std::size_t nx = 512;
  std::size_t ny = 512;
  double dx = 0.5;
  double dt = 0.05;
  double drive_frequency = 0.2;
  double amplitude = 1e-2;
  double source_width = 1.0;   // Gaussian sigma of the source spot
  double source_x = -1.0;      // negative: box centre
  double source_y = -1.0;
  double sponge_width = 24.0;
  double settle_time = -1.0;   // negative: long enough to reach the sponge
  int lockin_periods = 3;
  FftPlanner planner = FftPlanner::estimate;
};

struct RippleResult {
  double wavelength_measured;
  double wavelength_predicted;  // 2 pi v_s / Omega = 2 pi / Omega
  double wavenumber;
  double fit_r_min;
  double fit_r_max;
  std::vector<double> radii;
  std::vector<double> phase;      // unwrapped, averaged over four rays
  std::vector<double> amplitude;  // |lock-in amplitude| of the density
};

/// Throws ValidationError for out-of-band drives, non-linear amplitudes or a
/// source that leaves no room before the absorbing layer.
void validate(const RippleOptions& opts);

RippleResult run_ripple(const RippleOptions& opts,
                        const std::function<void(const LatticeField&)>& snapshot = {},
                        double snapshot_stride = 0.0);

// ---------------------------------------------------------------------------
// Flow past an obstacle

struct ObstacleOptions {
  std::size_t nx = 512;
  std::size_t ny = 512;
  double dx = 0.5;
  double dt = -1.0;              // negative: dx^2 / 10
  double flow_speed = 0.5;       // requested, in units of v_s
  double obstacle_radius = 5.0;  // healing lengths
  double obstacle_height = 10.0; // in units of mu
  double edge_width = -1.0;      // negative: 2 dx
  double center_x = 0.3;         // fraction of the box
  double center_y = 0.5;
  double sponge_width = 16.0;
  double ramp_time = 20.0;
  double duration = 150.0;
  double snapshot_stride = 5.0;
  double noise = 1e-3;
  std::uint64_t seed = 0;
  double density_threshold = kDefaultVortexDensityThreshold;
  FftPlanner planner = FftPlanner::estimate;
};

struct DragSample {
  double time;
  double fx;  // -integral |psi|^2 dU/dx
  double fy;
};

struct SnapshotSummary {
  double time;
  int vortex_count;
  int net_charge;     // over detected vortices
  int total_winding;  // over every plaquette of the torus
};

struct ObstacleResult {
  double realized_flow_speed;
  int winding_number;  // background phase windings across the box
  std::vector<VortexRecord> vortices;
  std::vector<DragSample> drag;
  std::vector<SnapshotSummary> snapshots;

  bool shed() const { return !vortices.empty(); }
};

/// Flow speed actually imposed: nearest 2 pi j / (nx dx) to `requested`.
double realized_flow_speed(double requested, std::size_t nx, double dx);

/// Smooth disk U0 / (1 + exp(-(R - r)/w)) sampled on the grid.
std::vector<double> obstacle_potential(const ObstacleOptions& opts);

void validate(const ObstacleOptions& opts);

ObstacleResult run_obstacle_flow(const ObstacleOptions& opts,
                                 const std::function<void(const LatticeField&)>& snapshot = {});

struct SweepRun {
  double flow_speed;
  bool shed;
  std::size_t vortex_count;
};

struct CriticalVelocitySweep {
  bool bracketed;  // low probe quiet and high probe shedding
  double onset;    // midpoint of the final bracket
  double quiet_below;
  double shedding_above;
  std::vector<SweepRun> runs;
};

/// Bisection on the realized flow speed between `low` and `high` until the
/// bracket is narrower than `tolerance`.
CriticalVelocitySweep find_critical_velocity(const ObstacleOptions& base, double low,
                                             double high, double tolerance = 0.05);

}  // namespace photonfluid::fluidsim
