#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "photonfluid/fluidsim/lattice.hpp"

namespace photonfluid::fluidsim {

inline constexpr char kSnapshotMagic[4] = {'P', 'H', 'F', 'L'};
inline constexpr std::uint32_t kSnapshotVersion = 1;

/// Little-endian: "PHFL", u32 version, u32 nx, u32 ny, f64 dx, f64 time, then
/// nx*ny (re, im) f64 pairs in row-major order.
void write_snapshot(std::ostream& os, const LatticeField& field);
void write_snapshot(const std::filesystem::path& path, const LatticeField& field);
LatticeField read_snapshot(std::istream& is);
LatticeField read_snapshot(const std::filesystem::path& path);

}  // namespace photonfluid::fluidsim
