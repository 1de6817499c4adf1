#pragma once

#include <iosfwd>
#include <utility>
#include <variant>
#include <vector>

#include "photonfluid/medium.hpp"

namespace photonfluid::bogoliubov {

using medium::CondensateParams;

/// V(kappa) = V0, constant in momentum (paraxial, fast Kerr response).
struct Contact {
  double V0;  // erg
};

/// V(kappa) = V0 [1 - d exp(-(kappa - kappa_r)^2 / 2 sigma^2)], 0 <= d < 1.
/// A Gaussian dip that can pull the Landau velocity below v_s.
struct Roton {
  double V0;
  double dip_center;  // kappa_r, g cm/s
  double dip_width;   // sigma, g cm/s
  double dip_depth;   // d
};

/// Piecewise-linear V(kappa) on a strictly increasing grid, held constant
/// outside it.
struct Tabulated {
  std::vector<std::pair<double, double>> points;  // (kappa, V)
};

class InteractionKernel {
 public:
  using Variant = std::variant<Contact, Roton, Tabulated>;

  /// Validates the shape; V(0) must be >= 0 (zero gives the free gas).
  explicit InteractionKernel(Variant v);

  static InteractionKernel contact(double V0) { return InteractionKernel(Contact{V0}); }
  static InteractionKernel free() { return contact(0.0); }

  /// V(|kappa|)
  double operator()(double kappa) const;
  double at_zero() const { return (*this)(0.0); }

  /// Same shape with every V multiplied by `factor` >= 0.
  InteractionKernel scaled(double factor) const;

  const Variant& variant() const { return v_; }
  bool is_contact() const { return std::holds_alternative<Contact>(v_); }

 private:
  Variant v_;
};

/// kappa^2 / 2m + N0 V(kappa): the Hartree single-particle energy after mu is
/// subtracted.
double modified_energy(double kappa, const CondensateParams& p,
                       const InteractionKernel& V);

/// sqrt(kappa^2 N0 V / m + kappa^4 / 4m^2). Throws UnstableModeError when the
/// radicand is negative.
double dispersion(double kappa, const CondensateParams& p,
                  const InteractionKernel& V);

/// sqrt(eps'^2 - N0^2 V^2), the form obtained from the diagonalization
/// conditions before substituting eps'.
double dispersion_from_modified_energy(double kappa, const CondensateParams& p,
                                       const InteractionKernel& V);

struct UV {
  double u;
  double v;
};

/// Canonical-transformation coefficients with u > 0 and sign(v) = sign(V), so
/// that omega u v = N0 V / 2. Throws UnstableModeError for a zero-energy mode.
UV uv_coefficients(double kappa, const CondensateParams& p,
                   const InteractionKernel& V);

struct QuasiparticleMode {
  double kappa;
  double energy;
  double u;
  double v;
  double eps_prime;
};

QuasiparticleMode mode(double kappa, const CondensateParams& p,
                       const InteractionKernel& V);

struct DispersionCurve {
  std::vector<QuasiparticleMode> modes;  // strictly increasing kappa > 0
  CondensateParams params;
  InteractionKernel kernel;
};

inline constexpr int kDefaultCurvePoints = 512;
inline constexpr double kDefaultKappaMinOverKc = 1e-4;
inline constexpr double kDefaultKappaMaxOverKc = 1e3;

/// Log-spaced curve on [kappa_min, kappa_max].
DispersionCurve make_curve(const CondensateParams& p, const InteractionKernel& V,
                           double kappa_min, double kappa_max,
                           int points = kDefaultCurvePoints);

/// Default grid: 512 points from 1e-4 kappa_c to 1e3 kappa_c.
DispersionCurve make_curve(const CondensateParams& p, const InteractionKernel& V);

/// kappa sqrt(N0 V(kappa) / m) and kappa^2 / 2m, the two asymptotic branches.
double phonon_term(double kappa, const CondensateParams& p, const InteractionKernel& V);
double free_term(double kappa, const CondensateParams& p);

/// lim omega/kappa from the three smallest samples, Richardson-extrapolated in
/// kappa^2. Samples must lie below 0.01 kappa_c when kappa_c > 0.
double sound_speed_from_curve(const DispersionCurve& curve);

/// Self-consistent root of kappa = 2 sqrt(m N0 V(kappa)); closed form for
/// contact kernels. Throws ConvergenceError after 100 fixed-point iterations.
double transition_momentum(const CondensateParams& p, const InteractionKernel& V);

/// 2 pi hbar / kappa_c = pi hbar / (m v_s)
double collective_length(const CondensateParams& p);
double collective_length(double kappa_c);

struct LandauMinimum {
  double velocity;  // cm/s
  double kappa;     // where the minimum of omega/kappa sits
};

/// min over the curve of omega/kappa, refined by golden-section search.
LandauMinimum landau_critical_velocity(const DispersionCurve& curve);

/// (1/N0) (A / (2 pi hbar)^2) * integral of v^2 2 pi kappa dkappa over
/// [1e-4 kappa_c, 1e3 kappa_c].
double depletion_fraction(const CondensateParams& p, const InteractionKernel& V,
                          double area_cm2);

/// CSV: kappa, energy, u, v, eps_prime, phonon_term, free_term; 17 digits.
void write_csv(std::ostream& os, const DispersionCurve& curve);

}  // namespace photonfluid::bogoliubov
