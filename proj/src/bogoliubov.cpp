#include "photonfluid/bogoliubov.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "photonfluid/error.hpp"
#include "photonfluid/units.hpp"

namespace photonfluid::bogoliubov {

using units::kCodata;
using units::kPi;

namespace {

struct KernelValidator {
  void operator()(const Contact& c) const {
    if (!std::isfinite(c.V0)) throw ValidationError("kernel V0 must be finite");
    if (c.V0 < 0.0) throw AttractiveMediumError("contact kernel V0 < 0");
  }
  void operator()(const Roton& r) const {
    if (!std::isfinite(r.V0) || r.V0 < 0.0) {
      throw AttractiveMediumError("roton kernel V0 must be non-negative");
    }
    if (!(r.dip_width > 0.0)) throw ValidationError("roton dip width must be positive");
    if (!(r.dip_center >= 0.0)) throw ValidationError("roton dip center must be >= 0");
    if (!(r.dip_depth >= 0.0 && r.dip_depth < 1.0)) {
      throw ValidationError("roton dip depth must lie in [0, 1)");
    }
  }
  void operator()(const Tabulated& t) const {
    if (t.points.empty()) throw ValidationError("tabulated kernel needs points");
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      const auto [k, v] = t.points[i];
      if (!std::isfinite(k) || !std::isfinite(v) || k < 0.0) {
        throw ValidationError("tabulated kernel points must be finite with kappa >= 0");
      }
      if (i > 0 && !(k > t.points[i - 1].first)) {
        throw ValidationError("tabulated kernel kappa grid must be strictly increasing");
      }
    }
    if (t.points.front().second < 0.0) {
      throw AttractiveMediumError("tabulated kernel has V(0) < 0");
    }
  }
};

struct KernelEvaluator {
  double kappa;
  double operator()(const Contact& c) const { return c.V0; }
  double operator()(const Roton& r) const {
    const double z = (kappa - r.dip_center) / r.dip_width;
    return r.V0 * (1.0 - r.dip_depth * std::exp(-0.5 * z * z));
  }
  double operator()(const Tabulated& t) const {
    const auto& pts = t.points;
    if (kappa <= pts.front().first) return pts.front().second;
    if (kappa >= pts.back().first) return pts.back().second;
    auto hi = std::upper_bound(pts.begin(), pts.end(), kappa,
                               [](double k, const auto& p) { return k < p.first; });
    auto lo = hi - 1;
    const double s = (kappa - lo->first) / (hi->first - lo->first);
    return lo->second + s * (hi->second - lo->second);
  }
};

double mean_field(double kappa, const CondensateParams& p, const InteractionKernel& V) {
  return p.N0 * V(kappa);
}

}  // namespace

InteractionKernel::InteractionKernel(Variant v) : v_(std::move(v)) {
  std::visit(KernelValidator{}, v_);
}

double InteractionKernel::operator()(double kappa) const {
  return std::visit(KernelEvaluator{std::abs(kappa)}, v_);
}

InteractionKernel InteractionKernel::scaled(double factor) const {
  if (!(factor >= 0.0)) throw ValidationError("kernel scale factor must be >= 0");
  Variant out = v_;
  std::visit(
      [factor](auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Tabulated>) {
          for (auto& pt : k.points) pt.second *= factor;
        } else {
          k.V0 *= factor;
        }
      },
      out);
  return InteractionKernel(std::move(out));
}

double modified_energy(double kappa, const CondensateParams& p,
                       const InteractionKernel& V) {
  return kappa * kappa / (2.0 * p.m) + mean_field(kappa, p, V);
}

double dispersion(double kappa, const CondensateParams& p,
                  const InteractionKernel& V) {
  if (kappa < 0.0) throw ValidationError("kappa must be >= 0");
  const double radicand = mean_field(kappa, p, V) / p.m + kappa * kappa / (4.0 * p.m * p.m);
  if (radicand < 0.0) {
    throw UnstableModeError("dynamically unstable mode at kappa = " +
                            std::to_string(kappa) + " (attractive interaction)");
  }
  return kappa * std::sqrt(radicand);
}

double dispersion_from_modified_energy(double kappa, const CondensateParams& p,
                                       const InteractionKernel& V) {
  const double eps = modified_energy(kappa, p, V);
  const double nv = mean_field(kappa, p, V);
  const double sq = (eps - nv) * (eps + nv);
  if (sq < 0.0) {
    throw UnstableModeError("negative squared quasiparticle energy");
  }
  return std::sqrt(sq);
}

UV uv_coefficients(double kappa, const CondensateParams& p,
                   const InteractionKernel& V) {
  if (!(kappa > 0.0)) {
    throw UnstableModeError("u, v are singular at kappa = 0 (condensate mode)");
  }
  const double w = dispersion(kappa, p, V);
  if (!(w > 0.0)) {
    throw UnstableModeError("zero-energy quasiparticle, u and v diverge");
  }
  const double eps = modified_energy(kappa, p, V);
  const double nv = mean_field(kappa, p, V);
  // v^2 = (eps'/w - 1)/2 rewritten as N0^2 V^2 / (2 w (eps' + w)) so the
  // free-particle end does not cancel.
  const double u2 = (eps + w) / (2.0 * w);
  const double v2 = nv * nv / (2.0 * w * (eps + w));
  return {std::sqrt(u2), std::copysign(std::sqrt(v2), nv)};
}

QuasiparticleMode mode(double kappa, const CondensateParams& p,
                       const InteractionKernel& V) {
  const UV c = uv_coefficients(kappa, p, V);
  return {kappa, dispersion(kappa, p, V), c.u, c.v, modified_energy(kappa, p, V)};
}

DispersionCurve make_curve(const CondensateParams& p, const InteractionKernel& V,
                           double kappa_min, double kappa_max, int points) {
  if (!(kappa_min > 0.0) || !(kappa_max > kappa_min) || !std::isfinite(kappa_max)) {
    throw ValidationError("kappa range must satisfy 0 < kappa_min < kappa_max");
  }
  if (points < 2) throw ValidationError("curve needs at least 2 points");
  DispersionCurve curve{{}, p, V};
  curve.modes.reserve(static_cast<std::size_t>(points));
  const double log_ratio = std::log(kappa_max / kappa_min);
  for (int i = 0; i < points; ++i) {
    const double kappa =
        i == points - 1 ? kappa_max
                        : kappa_min * std::exp(log_ratio * i / (points - 1));
    curve.modes.push_back(mode(kappa, p, V));
  }
  return curve;
}

DispersionCurve make_curve(const CondensateParams& p, const InteractionKernel& V) {
  const double kc = transition_momentum(p, V);
  if (!(kc > 0.0)) {
    throw ValidationError("default kappa grid needs kappa_c > 0; give an explicit range");
  }
  return make_curve(p, V, kDefaultKappaMinOverKc * kc, kDefaultKappaMaxOverKc * kc,
                    kDefaultCurvePoints);
}

double phonon_term(double kappa, const CondensateParams& p, const InteractionKernel& V) {
  return kappa * std::sqrt(std::max(0.0, mean_field(kappa, p, V)) / p.m);
}

double free_term(double kappa, const CondensateParams& p) {
  return kappa * kappa / (2.0 * p.m);
}

double sound_speed_from_curve(const DispersionCurve& curve) {
  const auto& modes = curve.modes;
  if (modes.size() < 3) {
    throw ValidationError("sound speed needs at least three curve samples");
  }
  const double kc = transition_momentum(curve.params, curve.kernel);
  if (kc > 0.0 && !(modes[2].kappa < 0.01 * kc)) {
    throw ValidationError("sound speed needs three samples below 0.01 kappa_c");
  }
  // Quadratic Lagrange extrapolation of omega/kappa to kappa = 0.
  double estimate = 0.0;
  for (int i = 0; i < 3; ++i) {
    double weight = 1.0;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      weight *= (0.0 - modes[j].kappa) / (modes[i].kappa - modes[j].kappa);
    }
    estimate += weight * modes[i].energy / modes[i].kappa;
  }
  return estimate;
}

double transition_momentum(const CondensateParams& p, const InteractionKernel& V) {
  auto update = [&](double kappa) {
    const double nv = mean_field(kappa, p, V);
    if (nv < 0.0) {
      throw ConvergenceError("transition momentum: V(kappa) < 0 on the iteration path");
    }
    return 2.0 * std::sqrt(p.m * nv);
  };
  double kappa = update(0.0);
  if (V.is_contact()) return kappa;
  for (int it = 0; it < 100; ++it) {
    const double next = update(kappa);
    if (std::abs(next - kappa) <= 1e-14 * std::max(next, kappa)) return next;
    kappa = next;
  }
  throw ConvergenceError("transition momentum fixed point did not converge in 100 iterations");
}

double collective_length(const CondensateParams& p) {
  return kPi * kCodata.hbar / (p.m * p.v_s);
}

double collective_length(double kappa_c) { return 2.0 * kPi * kCodata.hbar / kappa_c; }

LandauMinimum landau_critical_velocity(const DispersionCurve& curve) {
  const auto& modes = curve.modes;
  if (modes.empty()) throw ValidationError("empty dispersion curve");
  std::size_t best = 0;
  for (std::size_t i = 1; i < modes.size(); ++i) {
    if (modes[i].energy / modes[i].kappa < modes[best].energy / modes[best].kappa) best = i;
  }
  LandauMinimum result{modes[best].energy / modes[best].kappa, modes[best].kappa};
  if (best == 0 || best + 1 == modes.size()) return result;

  auto ratio = [&](double k) { return dispersion(k, curve.params, curve.kernel) / k; };
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = modes[best - 1].kappa;
  double b = modes[best + 1].kappa;
  double x1 = b - golden * (b - a);
  double x2 = a + golden * (b - a);
  double f1 = ratio(x1);
  double f2 = ratio(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-14 * b; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - golden * (b - a);
      f1 = ratio(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + golden * (b - a);
      f2 = ratio(x2);
    }
  }
  const double k = f1 < f2 ? x1 : x2;
  const double f = std::min(f1, f2);
  if (f < result.velocity) result = {f, k};
  return result;
}

double depletion_fraction(const CondensateParams& p, const InteractionKernel& V,
                          double area_cm2) {
  if (!(area_cm2 > 0.0)) throw ValidationError("depletion needs a positive area");
  if (!(p.N0 > 0.0)) throw ValidationError("depletion fraction needs N0 > 0");
  const double kc = transition_momentum(p, V);
  if (!(kc > 0.0)) return 0.0;

  // Integrate v^2 2 pi kappa dkappa in log kappa, one decade per panel.
  auto integrand = [&](double log_kappa) {
    const double kappa = std::exp(log_kappa);
    const UV c = uv_coefficients(kappa, p, V);
    return c.v * c.v * 2.0 * kPi * kappa * kappa;
  };
  using boost::math::quadrature::gauss_kronrod;
  const double lo = std::log(kDefaultKappaMinOverKc * kc);
  const double hi = std::log(kDefaultKappaMaxOverKc * kc);
  const int panels = 7;
  double total = 0.0;
  double total_error = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = lo + (hi - lo) * i / panels;
    const double b = lo + (hi - lo) * (i + 1) / panels;
    double err = 0.0;
    total += gauss_kronrod<double, 61>::integrate(integrand, a, b, 15, 1e-12, &err);
    total_error += err;
  }
  if (!std::isfinite(total) || total_error > 1e-8 * std::abs(total) + 1e-300) {
    throw ConvergenceError("depletion quadrature did not converge");
  }
  const double two_pi_hbar = 2.0 * kPi * kCodata.hbar;
  return area_cm2 / (two_pi_hbar * two_pi_hbar) * total / p.N0;
}

void write_csv(std::ostream& os, const DispersionCurve& curve) {
  os << "kappa,energy,u,v,eps_prime,phonon_term,free_term\n";
  char line[512];
  for (const auto& m : curve.modes) {
    std::snprintf(line, sizeof line, "%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e\n",
                  m.kappa, m.energy, m.u, m.v, m.eps_prime,
                  phonon_term(m.kappa, curve.params, curve.kernel),
                  free_term(m.kappa, curve.params));
    os << line;
  }
}

}  // namespace photonfluid::bogoliubov
