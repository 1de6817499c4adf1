#pragma once

#include <vector>

#include "photonfluid/fluidsim/lattice.hpp"

namespace photonfluid::fluidsim {

struct VortexRecord {
  double x;
  double y;
  int charge;
  double time;
};

inline constexpr double kDefaultVortexDensityThreshold = 1e-3;

/// Phase winding around every 1x1 plaquette whose corner densities all exceed
/// `threshold * background_density`. Positions come from the zero of the
/// bilinear interpolant inside the plaquette.
std::vector<VortexRecord> detect_vortices(
    const LatticeField& field, double background_density = 1.0,
    double threshold = kDefaultVortexDensityThreshold);

/// Sum of all plaquette windings on the torus, with no density mask.
int total_winding(const LatticeField& field);

}  // namespace photonfluid::fluidsim
