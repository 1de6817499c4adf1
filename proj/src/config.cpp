#include "photonfluid/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "photonfluid/error.hpp"
#include "photonfluid/units.hpp"

namespace photonfluid::config {

namespace {

// Typed access to one JSON object, with errors that name the dotted path.
class Section {
 public:
  Section(const json& doc, std::string path) : doc_(doc), path_(std::move(path)) {
    if (!doc_.is_object()) throw ValidationError(where() + ": expected an object");
  }

  std::string where(const std::string& key = {}) const {
    if (key.empty()) return path_.empty() ? "<root>" : path_;
    return path_.empty() ? key : path_ + "." + key;
  }

  bool has(const std::string& key) const {
    seen_.insert(key);
    return doc_.contains(key) && !doc_.at(key).is_null();
  }

  double number(const std::string& key) const {
    if (!has(key)) throw ValidationError(where(key) + ": required");
    const json& v = doc_.at(key);
    if (!v.is_number()) throw ValidationError(where(key) + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ValidationError(where(key) + ": must be finite");
    return x;
  }

  double number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  std::optional<double> optional_number(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  long long integer(const std::string& key, long long fallback) const {
    if (!has(key)) return fallback;
    const json& v = doc_.at(key);
    if (!v.is_number_integer()) throw ValidationError(where(key) + ": expected an integer");
    return v.get<long long>();
  }

  std::string string(const std::string& key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const json& v = doc_.at(key);
    if (!v.is_string()) throw ValidationError(where(key) + ": expected a string");
    return v.get<std::string>();
  }

  Section child(const std::string& key) const {
    seen_.insert(key);
    return Section(doc_.at(key), where(key));
  }

  const json& raw(const std::string& key) const {
    seen_.insert(key);
    return doc_.at(key);
  }

  /// Rejects keys nobody asked about (typos would otherwise be silent).
  void finish() const {
    for (const auto& [key, value] : doc_.items()) {
      if (!seen_.count(key)) throw ValidationError(where(key) + ": unknown field");
    }
  }

 private:
  const json& doc_;
  std::string path_;
  mutable std::set<std::string> seen_;
};

std::size_t grid_size(const Section& s, const std::string& key, std::size_t fallback) {
  const long long n = s.integer(key, static_cast<long long>(fallback));
  if (n <= 0 || !fluidsim::is_power_of_two(static_cast<std::size_t>(n))) {
    throw ValidationError(s.where(key) + ": must be a positive power of two");
  }
  return static_cast<std::size_t>(n);
}

fluidsim::FftPlanner planner(const Section& s) {
  const std::string p = s.string("fft_planner", "estimate");
  if (p == "estimate") return fluidsim::FftPlanner::estimate;
  if (p == "measure") return fluidsim::FftPlanner::measure;
  throw ValidationError(s.where("fft_planner") + ": expected \"estimate\" or \"measure\"");
}

cavity::CavityGeometry parse_cavity(const Section& s) {
  std::optional<long long> mode;
  if (s.has("mode_index")) mode = s.integer("mode_index", 0);
  auto geom = [&] {
    try {
      return cavity::CavityGeometry::make(s.number("length_cm"), s.number("reflectivity"),
                                          s.number("wavelength_cm"), mode);
    } catch (const ValidationError& e) {
      throw ValidationError(s.where() + ": " + e.what());
    }
  }();
  s.finish();
  return geom;
}

medium::MediumSpec parse_medium(const Section& s) {
  medium::MediumSpec m;
  m.atom_density = s.number("atom_density_cm3", 0.0);
  if (s.has("detuning_rad_s") && s.has("detuning_mhz")) {
    throw ValidationError(s.where() + ": give detuning_rad_s or detuning_mhz, not both");
  }
  if (s.has("detuning_mhz")) {
    m.detuning = 2.0 * units::kPi * 1e6 * s.number("detuning_mhz");
  } else {
    m.detuning = s.number("detuning_rad_s", 0.0);
  }
  m.dipole = s.optional_number("dipole_esu_cm");
  if (s.has("n2_esu") && s.has("n2_cm2_per_w")) {
    throw ValidationError(s.where() + ": give n2_esu or n2_cm2_per_w, not both");
  }
  if (s.has("n2_esu")) m.n2_direct = s.number("n2_esu");
  if (s.has("n2_cm2_per_w")) {
    m.n2_direct = units::convert_n2_practical_to_esu(s.number("n2_cm2_per_w"));
  }
  s.finish();
  try {
    m.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(s.where() + ": " + e.what());
  }
  return m;
}

KernelConfig parse_kernel(const Section& s) {
  KernelConfig k;
  const std::string kind = s.string("kind", "contact");
  if (kind == "contact") {
    k.kind = KernelConfig::Kind::contact;
  } else if (kind == "roton") {
    k.kind = KernelConfig::Kind::roton;
    k.dip_depth = s.number("dip_depth");
    k.dip_center_over_kc = s.number("dip_center_over_kc", k.dip_center_over_kc);
    k.dip_width_over_kc = s.number("dip_width_over_kc", k.dip_width_over_kc);
    if (!(k.dip_depth >= 0.0 && k.dip_depth < 1.0)) {
      throw ValidationError(s.where("dip_depth") + ": must lie in [0, 1)");
    }
    if (!(k.dip_width_over_kc > 0.0)) {
      throw ValidationError(s.where("dip_width_over_kc") + ": must be positive");
    }
  } else if (kind == "tabulated") {
    k.kind = KernelConfig::Kind::tabulated;
    const json& pts = s.raw("points");
    if (!pts.is_array() || pts.empty()) {
      throw ValidationError(s.where("points") + ": expected [[kappa/kc, V/V0], ...]");
    }
    for (const auto& p : pts) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw ValidationError(s.where("points") + ": each entry must be [kappa/kc, V/V0]");
      }
      k.table.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
  } else {
    throw ValidationError(s.where("kind") + ": expected contact, roton or tabulated");
  }
  s.finish();
  return k;
}

SpectrumConfig parse_spectrum(const Section& s) {
  SpectrumConfig c;
  c.kappa_min_over_kc = s.number("kappa_min_over_kc", c.kappa_min_over_kc);
  c.kappa_max_over_kc = s.number("kappa_max_over_kc", c.kappa_max_over_kc);
  c.points = static_cast<int>(s.integer("points", c.points));
  if (!(c.kappa_min_over_kc > 0.0) || !(c.kappa_max_over_kc > c.kappa_min_over_kc)) {
    throw ValidationError(s.where() + ": need 0 < kappa_min_over_kc < kappa_max_over_kc");
  }
  if (c.points < 3) throw ValidationError(s.where("points") + ": need at least 3");
  s.finish();
  return c;
}

ScenarioConfig parse_scenario(const Section& s, const json& numerics, std::uint64_t seed) {
  ScenarioConfig c;
  const std::string kind = s.string("kind", "");
  if (kind == "dispersion_probe") {
    c.kind = ScenarioConfig::Kind::dispersion_probe;
  } else if (kind == "ripple") {
    c.kind = ScenarioConfig::Kind::ripple;
  } else if (kind == "obstacle_flow") {
    c.kind = ScenarioConfig::Kind::obstacle_flow;
  } else {
    throw ValidationError(s.where("kind") +
                          ": expected dispersion_probe, ripple or obstacle_flow");
  }

  fluidsim::FftPlanner fft = fluidsim::FftPlanner::estimate;
  std::size_t nx = 512;
  std::size_t ny = 512;
  double dx = 0.5;
  std::optional<double> dt;
  if (!numerics.is_null()) {
    Section n(numerics, "numerics");
    nx = grid_size(n, "nx", nx);
    ny = grid_size(n, "ny", ny);
    dx = n.number("dx", dx);
    dt = n.optional_number("dt");
    fft = planner(n);
    n.finish();
    if (!(dx > 0.0)) throw ValidationError("numerics.dx: must be positive");
    if (dt && !(*dt > 0.0 && *dt <= fluidsim::max_stable_dt(dx))) {
      throw ValidationError("numerics.dt: must lie in (0, min(0.1, dx^2/pi)]");
    }
  }
  c.snapshot_stride = s.number("snapshot_stride", 0.0);
  if (c.snapshot_stride < 0.0) throw ValidationError(s.where("snapshot_stride") + ": must be >= 0");

  switch (c.kind) {
    case ScenarioConfig::Kind::dispersion_probe: {
      if (s.has("k_list")) {
        const json& ks = s.raw("k_list");
        if (!ks.is_array() || ks.empty()) {
          throw ValidationError(s.where("k_list") + ": expected a non-empty array");
        }
        c.k_list.clear();
        for (const auto& k : ks) {
          if (!k.is_number() || !(k.get<double>() > 0.0)) {
            throw ValidationError(s.where("k_list") + ": wavenumbers must be positive numbers");
          }
          c.k_list.push_back(k.get<double>());
        }
      }
      c.probe.epsilon = s.number("epsilon", c.probe.epsilon);
      c.probe.periods = s.number("periods", c.probe.periods);
      c.probe.planner = fft;
      break;
    }
    case ScenarioConfig::Kind::ripple: {
      auto& r = c.ripple;
      r.nx = nx;
      r.ny = ny;
      r.dx = dx;
      r.dt = dt.value_or(std::min(0.05, fluidsim::max_stable_dt(dx)));
      r.drive_frequency = s.number("drive_frequency", r.drive_frequency);
      r.amplitude = s.number("amplitude", r.amplitude);
      r.source_width = s.number("source_width", r.source_width);
      r.sponge_width = s.number("sponge_width", r.sponge_width);
      r.lockin_periods = static_cast<int>(s.integer("lockin_periods", r.lockin_periods));
      r.planner = fft;
      if (!(r.drive_frequency > 0.0) || r.drive_frequency > fluidsim::kMaxPhononDriveFrequency) {
        throw ValidationError(s.where("drive_frequency") + ": must lie in (0, 0.3]");
      }
      if (!(r.amplitude > 0.0) || r.amplitude > fluidsim::kMaxLinearDriveAmplitude) {
        throw ValidationError(s.where("amplitude") + ": beyond the linear regime (max 1e-2)");
      }
      break;
    }
    case ScenarioConfig::Kind::obstacle_flow: {
      auto& o = c.obstacle;
      o.nx = nx;
      o.ny = ny;
      o.dx = dx;
      o.dt = dt.value_or(dx * dx / 10.0);
      o.flow_speed = s.number("flow_speed", o.flow_speed);
      o.obstacle_radius = s.number("obstacle_radius", o.obstacle_radius);
      o.obstacle_height = s.number("obstacle_height", o.obstacle_height);
      o.duration = s.number("duration", o.duration);
      o.ramp_time = s.number("ramp_time", o.ramp_time);
      o.sponge_width = s.number("sponge_width", o.sponge_width);
      o.noise = s.number("noise", o.noise);
      if (c.snapshot_stride > 0.0) o.snapshot_stride = c.snapshot_stride;
      o.seed = seed;
      o.planner = fft;
      if (!(o.flow_speed >= 0.0)) throw ValidationError(s.where("flow_speed") + ": must be >= 0");
      if (o.obstacle_radius < 4.0 * dx) {
        throw ValidationError(s.where("obstacle_radius") + ": must be at least 4 dx");
      }
      if (!(o.duration > 0.0)) throw ValidationError(s.where("duration") + ": must be positive");
      if (s.has("sweep")) {
        Section sw = s.child("sweep");
        c.sweep_low = sw.number("low", c.sweep_low);
        c.sweep_high = sw.number("high", c.sweep_high);
        c.sweep_tolerance = sw.number("tolerance", c.sweep_tolerance);
        sw.finish();
        if (!(c.sweep_low >= 0.0) || !(c.sweep_high > c.sweep_low) ||
            !(c.sweep_tolerance > 0.0)) {
          throw ValidationError(s.where("sweep") + ": need 0 <= low < high, tolerance > 0");
        }
      }
      break;
    }
  }
  s.finish();
  return c;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError("override '" + assignment + "' is not key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? dot : dot - start);
    if (part.empty()) throw ValidationError("override key '" + key + "' has an empty segment");
    if (!node->is_object()) {
      if (!node->is_null()) throw ValidationError("override '" + key + "' descends into a non-object");
      *node = json::object();
    }
    node = &(*node)[part];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  *node = std::move(value);
}

RunConfig parse(const json& doc) {
  Section root(doc, "");
  if (!root.has("cavity")) throw ValidationError("cavity: required");
  if (!root.has("medium")) throw ValidationError("medium: required");
  if (!root.has("drive")) throw ValidationError("drive: required");

  const auto cav = parse_cavity(root.child("cavity"));
  const auto med = parse_medium(root.child("medium"));
  const Section drive = root.child("drive");
  const double intensity = drive.number("intensity_w_cm2");
  drive.finish();
  if (!(intensity >= 0.0)) throw ValidationError("drive.intensity_w_cm2: must be >= 0");

  const double area = root.number("quantization_area_cm2", kDefaultQuantizationAreaCm2);
  if (!(area > 0.0)) throw ValidationError("quantization_area_cm2: must be positive");

  const long long seed = root.integer("seed", 0);
  if (seed < 0) throw ValidationError("seed: must be non-negative");

  RunConfig rc{cav, med, intensity, area, {}, {}, std::nullopt, {},
               static_cast<std::uint64_t>(seed), doc};
  if (root.has("kernel")) rc.kernel = parse_kernel(root.child("kernel"));
  if (root.has("spectrum")) rc.spectrum = parse_spectrum(root.child("spectrum"));
  if (root.has("thresholds")) {
    const Section t = root.child("thresholds");
    rc.thresholds.condensate_min = t.number("condensate_min", rc.thresholds.condensate_min);
    rc.thresholds.fluid_ratio_min = t.number("fluid_ratio_min", rc.thresholds.fluid_ratio_min);
    t.finish();
  }
  const json numerics = root.has("numerics") ? root.raw("numerics") : json();
  if (root.has("scenario")) {
    rc.scenario = parse_scenario(root.child("scenario"), numerics, rc.seed);
  } else if (!numerics.is_null()) {
    // Still validate it so typos surface.
    parse_scenario(Section(json{{"kind", "dispersion_probe"}}, "scenario"), numerics, rc.seed);
  }
  root.finish();
  return rc;
}

std::string config_hash(const json& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : doc.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

bogoliubov::InteractionKernel build_kernel(const KernelConfig& k,
                                           const medium::CondensateParams& p) {
  using namespace bogoliubov;
  const double kc = 2.0 * std::sqrt(p.m * p.N0 * p.V0);
  switch (k.kind) {
    case KernelConfig::Kind::contact:
      return InteractionKernel(Contact{p.V0});
    case KernelConfig::Kind::roton:
      if (!(kc > 0.0)) throw ValidationError("kernel.roton: needs a nonzero condensate");
      return InteractionKernel(
          Roton{p.V0, k.dip_center_over_kc * kc, k.dip_width_over_kc * kc, k.dip_depth});
    case KernelConfig::Kind::tabulated: {
      if (!(kc > 0.0)) throw ValidationError("kernel.tabulated: needs a nonzero condensate");
      Tabulated t;
      for (const auto& [kr, vr] : k.table) t.points.emplace_back(kr * kc, vr * p.V0);
      return InteractionKernel(std::move(t));
    }
  }
  throw ValidationError("kernel: unknown kind");
}

}  // namespace photonfluid::config
