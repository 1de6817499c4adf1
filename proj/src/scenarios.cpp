#include "photonfluid/fluidsim/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "photonfluid/error.hpp"
#include "photonfluid/units.hpp"

namespace photonfluid::fluidsim {

using units::kPi;

double bogoliubov_frequency(double k) { return std::sqrt(k * k + 0.25 * k * k * k * k); }

namespace {

// Peak of the Hann-windowed DFT of `signal` (sampled every `dt`) over
// [omega_lo, omega_hi], refined by a parabola through log-magnitudes.
struct Peak {
  double omega;
  bool interior;
};

Peak spectral_peak(const std::vector<double>& signal, double dt, double omega_lo,
                   double omega_hi) {
  const std::size_t n = signal.size();
  double mean = 0.0;
  for (double s : signal) mean += s;
  mean /= static_cast<double>(n);
  std::vector<double> windowed(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                           static_cast<double>(n - 1)));
    windowed[i] = w * (signal[i] - mean);
  }
  const double record = dt * static_cast<double>(n);
  const double d_omega = 2.0 * kPi / (8.0 * record);
  const auto bins = static_cast<std::size_t>(std::ceil((omega_hi - omega_lo) / d_omega)) + 1;
  std::vector<double> magnitude(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    const double omega = omega_lo + d_omega * static_cast<double>(b);
    // Rotate by a recurrence instead of calling sin/cos per sample.
    const std::complex<double> step(std::cos(omega * dt), -std::sin(omega * dt));
    std::complex<double> phasor(1.0, 0.0);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      acc += windowed[i] * phasor;
      phasor *= step;
      if ((i & 1023) == 1023) phasor /= std::abs(phasor);
    }
    magnitude[b] = std::abs(acc);
  }
  const auto best = static_cast<std::size_t>(
      std::max_element(magnitude.begin(), magnitude.end()) - magnitude.begin());
  double omega = omega_lo + d_omega * static_cast<double>(best);
  const bool interior = best > 0 && best + 1 < bins;
  if (interior) {
    const double a = std::log(magnitude[best - 1]);
    const double b = std::log(magnitude[best]);
    const double c = std::log(magnitude[best + 1]);
    const double denom = a - 2.0 * b + c;
    if (denom < 0.0) omega += 0.5 * (a - c) / denom * d_omega;
  }
  return {omega, interior};
}

double min_image(double d, double length) {
  d = std::fmod(d, length);
  if (d > 0.5 * length) d -= length;
  if (d < -0.5 * length) d += length;
  return d;
}

// Quadratic ramp from 0 at the inner edge of the layer to `strength` at the
// box boundary.
std::vector<double> sponge_rate(std::size_t nx, std::size_t ny, double dx, double width,
                                double strength) {
  std::vector<double> rate(nx * ny, 0.0);
  if (width <= 0.0) return rate;
  const double lx = static_cast<double>(nx) * dx;
  const double ly = static_cast<double>(ny) * dx;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double y = static_cast<double>(iy) * dx;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double x = static_cast<double>(ix) * dx;
      const double edge = std::min({x, lx - x, y, ly - y});
      if (edge < width) {
        const double s = (width - edge) / width;
        rate[iy * nx + ix] = strength * s * s;
      }
    }
  }
  return rate;
}

double uniform_symmetric(std::mt19937_64& rng) {
  // 53-bit mantissa mapping, independent of the standard library's distributions.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

}  // namespace

DispersionSample measure_mode_frequency(double k, std::size_t nx, std::size_t ny, double dx,
                                        const ModeProbeOptions& opts) {
  if (!(k > 0.0)) throw ValidationError("probe wavenumber must be positive");
  const double box = static_cast<double>(nx) * dx;
  const double j = k * box / (2.0 * kPi);
  if (std::abs(j - std::round(j)) > 1e-9 * std::max(1.0, j) || std::round(j) < 1.0) {
    throw ValidationError("k = " + std::to_string(k) +
                          " is not commensurate with the periodic box");
  }
  if (!(opts.epsilon > 0.0) || !(opts.periods > 0.0) || !(opts.phase_step > 0.0)) {
    throw ValidationError("probe options must be positive");
  }

  const double omega_hi = k + 0.5 * k * k;  // bounds the Bogoliubov branch from above
  const double omega_lo = std::max(k, 0.5 * k * k);  // and from below
  const double dt = std::min(max_stable_dt(dx), opts.phase_step / omega_hi);
  const double record = opts.periods * 2.0 * kPi / omega_lo;
  const auto steps = static_cast<std::size_t>(std::ceil(record / dt));

  LatticeField field(nx, ny, dx);
  std::vector<double> basis(nx);
  for (std::size_t ix = 0; ix < nx; ++ix) basis[ix] = std::cos(k * static_cast<double>(ix) * dx);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) field(ix, iy) = 1.0 + opts.epsilon * basis[ix];
  }

  SplitStepper stepper(nx, ny, dx, opts.planner);
  Hamiltonian h;
  h.chemical_shift = 1.0;

  std::vector<double> signal;
  signal.reserve(steps);
  stepper.advance(field, dt, steps, h, [&](const LatticeField& f) {
    double acc = 0.0;
    for (std::size_t iy = 0; iy < ny; ++iy) {
      for (std::size_t ix = 0; ix < nx; ++ix) acc += (std::norm(f(ix, iy)) - 1.0) * basis[ix];
    }
    signal.push_back(acc / static_cast<double>(nx * ny));
  });

  const Peak peak = spectral_peak(signal, dt, 0.25 * omega_lo, 2.0 * omega_hi);
  const double cycles = peak.omega * dt * static_cast<double>(steps) / (2.0 * kPi);
  DispersionSample s;
  s.k = k;
  s.omega = peak.omega;
  s.omega_analytic = bogoliubov_frequency(k);
  s.relative_error = std::abs(s.omega - s.omega_analytic) / s.omega_analytic;
  s.resolved = peak.interior && cycles >= 4.0;
  return s;
}

std::vector<DispersionSample> measure_dispersion(const std::vector<double>& k_list,
                                                 const ModeProbeOptions& opts) {
  constexpr std::size_t kProbeNx = 32;
  constexpr std::size_t kProbeNy = 4;
  std::vector<DispersionSample> out;
  out.reserve(k_list.size());
  for (double k : k_list) {
    if (!(k > 0.0)) throw ValidationError("probe wavenumbers must be positive");
    const double dx = 2.0 * kPi / (k * static_cast<double>(kProbeNx));
    out.push_back(measure_mode_frequency(k, kProbeNx, kProbeNy, dx, opts));
  }
  return out;
}

void validate(const RippleOptions& opts) {
  if (!(opts.drive_frequency > 0.0) || opts.drive_frequency > kMaxPhononDriveFrequency) {
    throw ValidationError("ripple drive frequency must lie in (0, 0.3] (phonon band)");
  }
  if (!(opts.amplitude > 0.0) || opts.amplitude > kMaxLinearDriveAmplitude) {
    throw ValidationError("ripple source amplitude beyond the linear regime (max 1e-2)");
  }
  if (opts.lockin_periods < 1) throw ValidationError("lock-in needs at least one period");
  if (!(opts.source_width > 0.0)) throw ValidationError("source width must be positive");
  if (!is_power_of_two(opts.nx) || !is_power_of_two(opts.ny) || !(opts.dx > 0.0)) {
    throw ValidationError("ripple grid must be power-of-two sized with dx > 0");
  }
  if (!(opts.dt > 0.0) || opts.dt > max_stable_dt(opts.dx)) {
    throw ValidationError("ripple dt outside (0, min(0.1, dx^2/pi)]");
  }
  const double lx = static_cast<double>(opts.nx) * opts.dx;
  const double ly = static_cast<double>(opts.ny) * opts.dx;
  const double xs = opts.source_x < 0.0 ? 0.5 * lx : opts.source_x;
  const double ys = opts.source_y < 0.0 ? 0.5 * ly : opts.source_y;
  const double reach = std::min({xs, lx - xs, ys, ly - ys}) - opts.sponge_width;
  if (reach < 8.0 * opts.source_width) {
    throw ValidationError("ripple source too close to the absorbing layer");
  }
}

void validate(const ObstacleOptions& opts) {
  if (!is_power_of_two(opts.nx) || !is_power_of_two(opts.ny) || !(opts.dx > 0.0)) {
    throw ValidationError("obstacle grid must be power-of-two sized with dx > 0");
  }
  const double dt = opts.dt > 0.0 ? opts.dt : opts.dx * opts.dx / 10.0;
  if (dt > max_stable_dt(opts.dx)) {
    throw ValidationError("obstacle dt exceeds min(0.1, dx^2/pi)");
  }
  if (!(opts.flow_speed >= 0.0)) throw ValidationError("flow speed must be >= 0");
  if (opts.obstacle_radius < 4.0 * opts.dx) {
    throw ValidationError("obstacle radius must be at least 4 dx to resolve it");
  }
  if (!(opts.obstacle_height > 0.0)) throw ValidationError("obstacle height must be positive");
  if (!(opts.duration > 0.0) || !(opts.snapshot_stride > 0.0)) {
    throw ValidationError("duration and snapshot stride must be positive");
  }
  const double lx = static_cast<double>(opts.nx) * opts.dx;
  const double ly = static_cast<double>(opts.ny) * opts.dx;
  const double w = opts.edge_width > 0.0 ? opts.edge_width : 2.0 * opts.dx;
  const double xc = opts.center_x * lx;
  const double yc = opts.center_y * ly;
  const double extent = opts.obstacle_radius + 4.0 * w;
  if (std::min({xc - extent, lx - xc - extent, yc - extent, ly - yc - extent}) <
      opts.sponge_width) {
    throw ValidationError("obstacle too close to the boundary sponge");
  }
}

RippleResult run_ripple(const RippleOptions& opts,
                        const std::function<void(const LatticeField&)>& snapshot,
                        double snapshot_stride) {
  validate(opts);
  const std::size_t nx = opts.nx;
  const std::size_t ny = opts.ny;
  const double dx = opts.dx;
  LatticeField field(nx, ny, dx, cplx(1.0, 0.0));
  const double lx = field.length_x();
  const double ly = field.length_y();

  const auto sx = static_cast<std::size_t>(
      std::lround((opts.source_x < 0.0 ? 0.5 * lx : opts.source_x) / dx)) % nx;
  const auto sy = static_cast<std::size_t>(
      std::lround((opts.source_y < 0.0 ? 0.5 * ly : opts.source_y) / dx)) % ny;
  const double xs = static_cast<double>(sx) * dx;
  const double ys = static_cast<double>(sy) * dx;

  // Distance from the source to the inner edge of the sponge along the rays.
  const double reach = std::min({xs, lx - xs, ys, ly - ys}) - opts.sponge_width;

  PointDrive drive;
  drive.amplitude = opts.amplitude;
  drive.frequency = opts.drive_frequency;
  drive.profile.resize(nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double ddy = min_image(static_cast<double>(iy) * dx - ys, ly);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double ddx = min_image(static_cast<double>(ix) * dx - xs, lx);
      const double r2 = ddx * ddx + ddy * ddy;
      drive.profile[iy * nx + ix] =
          std::exp(-0.5 * r2 / (opts.source_width * opts.source_width));
    }
  }
  Sponge sponge;
  sponge.rate = sponge_rate(nx, ny, dx, opts.sponge_width, 1.0);
  sponge.target.assign(nx * ny, cplx(1.0, 0.0));

  Hamiltonian h;
  h.chemical_shift = 1.0;
  h.drive = &drive;
  h.sponge = &sponge;

  SplitStepper stepper(nx, ny, dx, opts.planner);
  const double dt = opts.dt;
  const double settle = opts.settle_time >= 0.0 ? opts.settle_time : 1.5 * reach;

  auto run_until = [&](double t_end) {
    while (field.time() + 0.5 * dt < t_end) {
      std::size_t chunk = static_cast<std::size_t>(std::ceil((t_end - field.time()) / dt - 0.5));
      double next_snapshot = t_end;
      if (snapshot && snapshot_stride > 0.0) {
        next_snapshot = (std::floor(field.time() / snapshot_stride + 1e-9) + 1.0) * snapshot_stride;
        chunk = std::min(chunk, static_cast<std::size_t>(std::max(
                                    1.0, std::round((next_snapshot - field.time()) / dt))));
      }
      stepper.advance(field, dt, std::max<std::size_t>(chunk, 1), h);
      if (snapshot && snapshot_stride > 0.0 && field.time() + 0.5 * dt >= next_snapshot) {
        snapshot(field);
      }
    }
  };
  run_until(settle);

  // Lock-in detection of the density oscillation along four rays.
  const auto ray_points = static_cast<std::size_t>(reach / dx);
  std::vector<cplx> lockin(ray_points, cplx(0.0, 0.0));
  const double period = 2.0 * kPi / opts.drive_frequency;
  const double t_start = field.time();
  const double t_stop = t_start + opts.lockin_periods * period;
  constexpr std::size_t kSampleEvery = 4;
  auto accumulate = [&](double weight) {
    const cplx rot = std::polar(weight, opts.drive_frequency * field.time());
    for (std::size_t m = 0; m < ray_points; ++m) {
      const double rho = std::norm(field((sx + m) % nx, sy)) +
                         std::norm(field((sx + nx - m % nx) % nx, sy)) +
                         std::norm(field(sx, (sy + m) % ny)) +
                         std::norm(field(sx, (sy + ny - m % ny) % ny));
      lockin[m] += (0.25 * rho - 1.0) * rot;
    }
  };
  const double sample_dt = kSampleEvery * dt;
  const auto samples = static_cast<std::size_t>(std::round((t_stop - t_start) / sample_dt));
  // Trapezoid rule over an integer number of drive periods.
  accumulate(0.5 * sample_dt);
  for (std::size_t s = 1; s <= samples; ++s) {
    stepper.advance(field, dt, kSampleEvery, h);
    accumulate(s == samples ? 0.5 * sample_dt : sample_dt);
  }
  if (snapshot) snapshot(field);

  RippleResult result;
  result.wavelength_predicted = 2.0 * kPi / opts.drive_frequency;
  result.fit_r_min = std::max(4.0 * opts.source_width, 0.15 * reach);
  result.fit_r_max = 0.85 * reach;
  double previous = 0.0;
  double offset = 0.0;
  for (std::size_t m = 0; m < ray_points; ++m) {
    const double raw = std::arg(lockin[m]);
    if (m > 0) {
      double jump = raw - previous;
      if (jump > kPi) offset -= 2.0 * kPi;
      if (jump < -kPi) offset += 2.0 * kPi;
    }
    previous = raw;
    result.radii.push_back(static_cast<double>(m) * dx);
    result.phase.push_back(raw + offset);
    result.amplitude.push_back(std::abs(lockin[m]) / (t_stop - t_start));
  }

  // Least-squares slope of phase against radius in the far field.
  double sr = 0.0, sp = 0.0, srr = 0.0, srp = 0.0, count = 0.0;
  for (std::size_t m = 0; m < ray_points; ++m) {
    const double r = result.radii[m];
    if (r < result.fit_r_min || r > result.fit_r_max) continue;
    sr += r;
    sp += result.phase[m];
    srr += r * r;
    srp += r * result.phase[m];
    count += 1.0;
  }
  if (count < 3.0) throw NumericalError("ripple fit window holds fewer than three points");
  const double slope = (count * srp - sr * sp) / (count * srr - sr * sr);
  if (!(std::abs(slope) > 0.0) || !std::isfinite(slope)) {
    throw NumericalError("ripple phase shows no radial gradient");
  }
  result.wavenumber = std::abs(slope);
  result.wavelength_measured = 2.0 * kPi / result.wavenumber;
  return result;
}

double realized_flow_speed(double requested, std::size_t nx, double dx) {
  const double box = static_cast<double>(nx) * dx;
  const double j = std::round(requested * box / (2.0 * kPi));
  return 2.0 * kPi * j / box;
}

std::vector<double> obstacle_potential(const ObstacleOptions& opts) {
  const double w = opts.edge_width > 0.0 ? opts.edge_width : 2.0 * opts.dx;
  const double lx = static_cast<double>(opts.nx) * opts.dx;
  const double ly = static_cast<double>(opts.ny) * opts.dx;
  const double xc = opts.center_x * lx;
  const double yc = opts.center_y * ly;
  std::vector<double> u(opts.nx * opts.ny);
  for (std::size_t iy = 0; iy < opts.ny; ++iy) {
    const double ddy = min_image(static_cast<double>(iy) * opts.dx - yc, ly);
    for (std::size_t ix = 0; ix < opts.nx; ++ix) {
      const double ddx = min_image(static_cast<double>(ix) * opts.dx - xc, lx);
      const double r = std::hypot(ddx, ddy);
      u[iy * opts.nx + ix] =
          opts.obstacle_height / (1.0 + std::exp(-(opts.obstacle_radius - r) / w));
    }
  }
  return u;
}

ObstacleResult run_obstacle_flow(const ObstacleOptions& opts,
                                 const std::function<void(const LatticeField&)>& snapshot) {
  const std::size_t nx = opts.nx;
  const std::size_t ny = opts.ny;
  const double dx = opts.dx;
  LatticeField field(nx, ny, dx);
  const double lx = field.length_x();
  const double ly = field.length_y();
  const double dt = opts.dt > 0.0 ? opts.dt : dx * dx / 10.0;
  const double w = opts.edge_width > 0.0 ? opts.edge_width : 2.0 * dx;

  validate(opts);
  const double xc = opts.center_x * lx;
  const double yc = opts.center_y * ly;
  ObstacleResult result;
  result.realized_flow_speed = realized_flow_speed(opts.flow_speed, nx, dx);
  result.winding_number = static_cast<int>(std::lround(result.realized_flow_speed * lx / (2.0 * kPi)));
  const double v = result.realized_flow_speed;

  std::vector<cplx> background(nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      background[iy * nx + ix] = std::polar(1.0, v * static_cast<double>(ix) * dx);
    }
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t i = 0; i < nx * ny; ++i) {
    const double re = uniform_symmetric(rng);
    const double im = uniform_symmetric(rng);
    field.data()[i] = background[i] * (1.0 + opts.noise * cplx(re, im));
  }

  const auto potential = obstacle_potential(opts);
  std::vector<double> grad_x(nx * ny);
  std::vector<double> grad_y(nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double ddy = min_image(static_cast<double>(iy) * dx - yc, ly);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double ddx = min_image(static_cast<double>(ix) * dx - xc, lx);
      const double r = std::hypot(ddx, ddy);
      const double s = potential[iy * nx + ix] / opts.obstacle_height;
      const double du_dr = -opts.obstacle_height * s * (1.0 - s) / w;
      grad_x[iy * nx + ix] = r > 0.0 ? du_dr * ddx / r : 0.0;
      grad_y[iy * nx + ix] = r > 0.0 ? du_dr * ddy / r : 0.0;
    }
  }

  Sponge sponge;
  sponge.rate = sponge_rate(nx, ny, dx, opts.sponge_width, 1.0);
  sponge.target = background;

  const double ramp_time = opts.ramp_time;
  Hamiltonian h;
  h.potential = potential;
  h.potential_ramp = [ramp_time](double t) {
    return ramp_time > 0.0 ? std::min(1.0, t / ramp_time) : 1.0;
  };
  h.chemical_shift = 1.0 + 0.5 * v * v;
  h.sponge = &sponge;

  SplitStepper stepper(nx, ny, dx, opts.planner);
  const auto chunk = static_cast<std::size_t>(std::max(1.0, std::round(opts.snapshot_stride / dt)));
  const auto total = static_cast<std::size_t>(std::round(opts.duration / dt));
  std::size_t done = 0;
  while (done < total) {
    const std::size_t n = std::min(chunk, total - done);
    stepper.advance(field, dt, n, h);
    done += n;

    auto found = detect_vortices(field, 1.0, opts.density_threshold);
    int net = 0;
    for (const auto& rec : found) net += rec.charge;
    result.snapshots.push_back({field.time(), static_cast<int>(found.size()), net,
                                total_winding(field)});
    result.vortices.insert(result.vortices.end(), found.begin(), found.end());

    const double ramp = h.potential_ramp(field.time());
    double fx = 0.0;
    double fy = 0.0;
    for (std::size_t i = 0; i < nx * ny; ++i) {
      const double rho = std::norm(field.data()[i]);
      fx -= rho * grad_x[i];
      fy -= rho * grad_y[i];
    }
    result.drag.push_back({field.time(), fx * ramp * dx * dx, fy * ramp * dx * dx});
    if (snapshot) snapshot(field);
  }
  return result;
}

CriticalVelocitySweep find_critical_velocity(const ObstacleOptions& base, double low,
                                             double high, double tolerance) {
  if (!(low >= 0.0) || !(high > low) || !(tolerance > 0.0)) {
    throw ValidationError("sweep needs 0 <= low < high and a positive tolerance");
  }
  CriticalVelocitySweep sweep{};
  auto probe = [&](double speed) {
    ObstacleOptions o = base;
    o.flow_speed = speed;
    const ObstacleResult r = run_obstacle_flow(o);
    sweep.runs.push_back({r.realized_flow_speed, r.shed(), r.vortices.size()});
    return r.shed();
  };
  double lo = realized_flow_speed(low, base.nx, base.dx);
  double hi = realized_flow_speed(high, base.nx, base.dx);
  const bool lo_sheds = probe(lo);
  const bool hi_sheds = probe(hi);
  sweep.bracketed = !lo_sheds && hi_sheds;
  if (!sweep.bracketed) {
    sweep.quiet_below = lo;
    sweep.shedding_above = hi;
    sweep.onset = std::nan("");
    return sweep;
  }
  while (hi - lo > tolerance) {
    const double mid = realized_flow_speed(0.5 * (lo + hi), base.nx, base.dx);
    if (mid <= lo || mid >= hi) break;
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  sweep.quiet_below = lo;
  sweep.shedding_above = hi;
  sweep.onset = 0.5 * (lo + hi);
  return sweep;
}

}  // namespace photonfluid::fluidsim
