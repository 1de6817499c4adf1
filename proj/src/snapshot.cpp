#include "photonfluid/fluidsim/snapshot.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "photonfluid/error.hpp"

namespace photonfluid::fluidsim {

namespace {

template <typename U>
void put_le(std::ostream& os, U value) {
  std::array<char, sizeof(U)> bytes{};
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  }
  os.write(bytes.data(), bytes.size());
}

template <typename U>
U get_le(std::istream& is) {
  std::array<unsigned char, sizeof(U)> bytes{};
  is.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!is) throw ValidationError("truncated snapshot");
  U value = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) value |= static_cast<U>(bytes[i]) << (8 * i);
  return value;
}

void put_f64(std::ostream& os, double v) { put_le(os, std::bit_cast<std::uint64_t>(v)); }
double get_f64(std::istream& is) { return std::bit_cast<double>(get_le<std::uint64_t>(is)); }

}  // namespace

void write_snapshot(std::ostream& os, const LatticeField& field) {
  os.write(kSnapshotMagic, 4);
  put_le(os, kSnapshotVersion);
  put_le(os, static_cast<std::uint32_t>(field.nx()));
  put_le(os, static_cast<std::uint32_t>(field.ny()));
  put_f64(os, field.dx());
  put_f64(os, field.time());
  for (const auto& z : field.data()) {
    put_f64(os, z.real());
    put_f64(os, z.imag());
  }
  if (!os) throw NumericalError("snapshot write failed");
}

void write_snapshot(const std::filesystem::path& path, const LatticeField& field) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ValidationError("cannot open " + path.string() + " for writing");
  write_snapshot(os, field);
}

LatticeField read_snapshot(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kSnapshotMagic, 4) != 0) {
    throw ValidationError("not a PHFL snapshot");
  }
  const auto version = get_le<std::uint32_t>(is);
  if (version != kSnapshotVersion) throw ValidationError("unsupported snapshot version");
  const auto nx = get_le<std::uint32_t>(is);
  const auto ny = get_le<std::uint32_t>(is);
  const double dx = get_f64(is);
  const double time = get_f64(is);
  LatticeField field(nx, ny, dx);
  field.set_time(time);
  for (auto& z : field.data()) {
    const double re = get_f64(is);
    const double im = get_f64(is);
    z = cplx(re, im);
  }
  return field;
}

LatticeField read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ValidationError("cannot open " + path.string());
  return read_snapshot(is);
}

}  // namespace photonfluid::fluidsim
