// photonfluid: parameter reports, Bogoliubov spectra and GPE simulations of a
// photon fluid in a nonlinear Fabry-Perot cavity.
//
//   photonfluid params|spectrum|simulate|sweep --config <file>
//               [--set key=value ...] [--out <dir>]
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "photonfluid/bogoliubov.hpp"
#include "photonfluid/config.hpp"
#include "photonfluid/error.hpp"
#include "photonfluid/fluidsim/scenarios.hpp"
#include "photonfluid/fluidsim/snapshot.hpp"
#include "photonfluid/report.hpp"

namespace fs = std::filesystem;
namespace pf = photonfluid;
using pf::config::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Common {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
};

struct Loaded {
  pf::config::RunConfig rc;
  std::string hash;
};

Loaded load(const Common& c) {
  json doc = pf::config::load_json(c.config_path);
  for (const auto& o : c.overrides) pf::config::apply_override(doc, o);
  Loaded l{pf::config::parse(doc), pf::config::config_hash(doc)};
  return l;
}

fs::path prepare_out(const Common& c) {
  if (c.out_dir.empty()) throw pf::ValidationError("--out is required for this command");
  fs::path out(c.out_dir);
  fs::create_directories(out);
  return out;
}

std::string csv_comment(const Loaded& l) {
  return std::string("# photonfluid ") + kVersion + " config=" + l.hash + "\n";
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw pf::ValidationError("cannot write " + path.string());
  return os;
}

void write_json(const fs::path& path, const json& j) {
  auto os = open_out(path);
  os << j.dump(2) << '\n';
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

json condensate_json(const pf::medium::CondensateParams& p) {
  return json{{"m_g", p.m},          {"N0", p.N0},         {"V0_erg", p.V0},
              {"mu_erg", p.mu_chem}, {"v_s_cm_s", p.v_s}, {"V_cav_cm3", p.V_cav}};
}

int cmd_params(const Common& c) {
  const Loaded l = load(c);
  const auto report = pf::report::make_parameter_report(l.rc);
  std::cout << pf::report::to_table(report);
  if (!c.out_dir.empty()) {
    json j = pf::report::to_json(report);
    j["config_hash"] = l.hash;
    write_json(prepare_out(c) / "params.json", j);
  }
  return 0;
}

int cmd_spectrum(const Common& c) {
  const Loaded l = load(c);
  const auto report = pf::report::make_parameter_report(l.rc);
  const auto& cp = report.point.condensate;
  if (!(cp.mu_chem > 0.0)) {
    throw pf::ValidationError("spectrum needs a nonzero condensate (intensity > 0, n2 > 0)");
  }
  const auto kernel = pf::config::build_kernel(l.rc.kernel, cp);
  const double kc = 2.0 * std::sqrt(cp.m * cp.mu_chem);
  const auto& sp = l.rc.spectrum;
  const auto curve = pf::bogoliubov::make_curve(cp, kernel, sp.kappa_min_over_kc * kc,
                                                sp.kappa_max_over_kc * kc, sp.points);
  const auto summary = pf::report::summarize(curve);

  const fs::path out = prepare_out(c);
  {
    auto os = open_out(out / "spectrum.csv");
    os << csv_comment(l);
    pf::bogoliubov::write_csv(os, curve);
  }
  json j = pf::report::to_json(summary);
  j["config_hash"] = l.hash;
  write_json(out / "spectrum_summary.json", j);
  std::cout << j.dump(2) << '\n';
  return 0;
}

void write_snapshot_pair(const fs::path& out, int index, const pf::fluidsim::LatticeField& f,
                         const json& scenario, const json& condensate) {
  char name[32];
  std::snprintf(name, sizeof name, "snap_%06d", index);
  pf::fluidsim::write_snapshot(out / (std::string(name) + ".phfl"), f);
  write_json(out / (std::string(name) + ".json"),
             json{{"time", f.time()}, {"nx", f.nx()}, {"ny", f.ny()}, {"dx", f.dx()},
                  {"scenario", scenario}, {"condensate", condensate}});
}

int cmd_simulate(const Common& c) {
  const Loaded l = load(c);
  if (!l.rc.scenario) throw pf::ValidationError("scenario: required for simulate");
  const auto& sc = *l.rc.scenario;
  const auto report = pf::report::make_parameter_report(l.rc);
  const auto& cp = report.point.condensate;
  std::optional<pf::fluidsim::Scales> scales;
  if (cp.mu_chem > 0.0) scales = pf::fluidsim::nondimensionalize(cp);

  using Kind = pf::config::ScenarioConfig::Kind;
  if (sc.kind == Kind::ripple) pf::fluidsim::validate(sc.ripple);
  if (sc.kind == Kind::obstacle_flow) pf::fluidsim::validate(sc.obstacle);

  const fs::path out = prepare_out(c);
  const json scenario_json = l.rc.source.value("scenario", json::object());
  const json condensate = condensate_json(cp);
  json summary{{"config_hash", l.hash}, {"scenario", scenario_json}};

  switch (sc.kind) {
    case Kind::dispersion_probe: {
      const auto samples = pf::fluidsim::measure_dispersion(sc.k_list, sc.probe);
      auto os = open_out(out / "dispersion.csv");
      os << csv_comment(l) << "k,omega_measured,omega_analytic,relative_error,resolved\n";
      double worst = 0.0;
      bool all_resolved = true;
      for (const auto& s : samples) {
        os << fmt(s.k) << ',' << fmt(s.omega) << ',' << fmt(s.omega_analytic) << ','
           << fmt(s.relative_error) << ',' << (s.resolved ? 1 : 0) << '\n';
        worst = std::max(worst, s.relative_error);
        all_resolved = all_resolved && s.resolved;
      }
      summary["max_relative_error"] = worst;
      summary["all_resolved"] = all_resolved;
      break;
    }
    case Kind::ripple: {
      int index = 0;
      const auto result = pf::fluidsim::run_ripple(
          sc.ripple,
          [&](const pf::fluidsim::LatticeField& f) {
            write_snapshot_pair(out, index++, f, scenario_json, condensate);
          },
          sc.snapshot_stride);
      auto os = open_out(out / "ripple.csv");
      os << csv_comment(l) << "r,phase,amplitude\n";
      for (std::size_t i = 0; i < result.radii.size(); ++i) {
        os << fmt(result.radii[i]) << ',' << fmt(result.phase[i]) << ','
           << fmt(result.amplitude[i]) << '\n';
      }
      summary["wavelength_measured"] = result.wavelength_measured;
      summary["wavelength_predicted"] = result.wavelength_predicted;
      summary["relative_error"] =
          std::abs(result.wavelength_measured - result.wavelength_predicted) /
          result.wavelength_predicted;
      if (scales) {
        summary["wavelength_measured_cm"] = scales->length_to_physical(result.wavelength_measured);
        summary["drive_frequency_rad_s"] = sc.ripple.drive_frequency / scales->time;
      }
      break;
    }
    case Kind::obstacle_flow: {
      int index = 0;
      const bool keep = sc.snapshot_stride > 0.0;
      const auto result = pf::fluidsim::run_obstacle_flow(
          sc.obstacle, [&](const pf::fluidsim::LatticeField& f) {
            if (keep) write_snapshot_pair(out, index++, f, scenario_json, condensate);
          });
      {
        auto os = open_out(out / "vortices.csv");
        os << csv_comment(l) << "time,x,y,charge\n";
        for (const auto& v : result.vortices) {
          os << fmt(v.time) << ',' << fmt(v.x) << ',' << fmt(v.y) << ',' << v.charge << '\n';
        }
      }
      {
        auto os = open_out(out / "drag.csv");
        os << csv_comment(l) << "time,fx,fy\n";
        for (const auto& d : result.drag) {
          os << fmt(d.time) << ',' << fmt(d.fx) << ',' << fmt(d.fy) << '\n';
        }
      }
      summary["realized_flow_speed"] = result.realized_flow_speed;
      summary["vortex_detections"] = result.vortices.size();
      summary["shed"] = result.shed();
      if (scales) {
        summary["realized_flow_speed_cm_s"] =
            scales->velocity_to_physical(result.realized_flow_speed);
      }
      break;
    }
  }
  write_json(out / "simulate_summary.json", summary);
  std::cout << summary.dump(2) << '\n';
  return 0;
}

int cmd_sweep(const Common& c) {
  const Loaded l = load(c);
  if (!l.rc.scenario || l.rc.scenario->kind != pf::config::ScenarioConfig::Kind::obstacle_flow) {
    throw pf::ValidationError("scenario.kind: sweep needs an obstacle_flow scenario");
  }
  const auto& sc = *l.rc.scenario;
  pf::fluidsim::validate(sc.obstacle);
  const fs::path out = prepare_out(c);
  const auto sweep = pf::fluidsim::find_critical_velocity(sc.obstacle, sc.sweep_low,
                                                          sc.sweep_high, sc.sweep_tolerance);
  {
    auto os = open_out(out / "sweep.csv");
    os << csv_comment(l) << "flow_speed,shed,vortex_detections\n";
    for (const auto& r : sweep.runs) {
      os << fmt(r.flow_speed) << ',' << (r.shed ? 1 : 0) << ',' << r.vortex_count << '\n';
    }
  }
  json j{{"config_hash", l.hash},
         {"bracketed", sweep.bracketed},
         {"onset_velocity", sweep.bracketed ? json(sweep.onset) : json(nullptr)},
         {"quiet_below", sweep.quiet_below},
         {"shedding_above", sweep.shedding_above}};
  write_json(out / "sweep.json", j);
  std::cout << j.dump(2) << '\n';
  return sweep.bracketed ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-fluid toolkit: cavity parameters, Bogoliubov spectra, GPE simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  auto add_common = [&](CLI::App* sub, bool out_required) {
    sub->add_option("--config", common.config_path, "JSON config (comments allowed)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--set", common.overrides, "Override a config field: dotted.key=value");
    auto* out = sub->add_option("--out", common.out_dir, "Output directory");
    if (out_required) out->required();
  };
  auto* params = app.add_subcommand("params", "Cavity, medium and condensate parameter report");
  add_common(params, false);
  auto* spectrum = app.add_subcommand("spectrum", "Bogoliubov dispersion curve as CSV");
  add_common(spectrum, true);
  auto* simulate = app.add_subcommand("simulate", "Run the configured GPE scenario");
  add_common(simulate, true);
  auto* sweep = app.add_subcommand("sweep", "Bisect the vortex-shedding onset velocity");
  add_common(sweep, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*params) return cmd_params(common);
    if (*spectrum) return cmd_spectrum(common);
    if (*simulate) return cmd_simulate(common);
    if (*sweep) return cmd_sweep(common);
  } catch (const pf::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const pf::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
