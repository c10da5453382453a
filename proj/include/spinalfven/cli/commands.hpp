#pragma once

// Subcommands of the spinalfven executable. run_cli() is the whole program
// minus process setup, so tests can drive it in-process.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "spinalfven/cli/config.hpp"
#include "spinalfven/cli/output.hpp"
#include "spinalfven/dispersion.hpp"
#include "spinalfven/nls_solver.hpp"
#include "spinalfven/plasma.hpp"
#include "spinalfven/regime_map.hpp"
#include "spinalfven/spin_fluid.hpp"

namespace spinalfven::cli {

enum ExitCode : int { Success = 0, Failure = 1, Invalid = 2, BlowUp = 3 };

struct ReportRow {
  std::string section;
  std::string name;
  double value;
  std::string unit;
  std::string note;  // regime side for the quantum parameters
};

inline void print_rows(std::ostream& out, const std::vector<ReportRow>& rows) {
  std::string section;
  for (const auto& r : rows) {
    if (r.section != section) {
      if (!section.empty()) out << '\n';
      section = r.section;
      out << "# " << section << '\n';
    }
    out << r.name << " = " << num(r.value);
    if (!r.unit.empty()) out << ' ' << r.unit;
    if (!r.note.empty()) out << "  [" << r.note << ']';
    out << '\n';
  }
}

inline json rows_to_json(const std::vector<ReportRow>& rows) {
  json doc = json::object();
  for (const auto& r : rows) {
    json entry = {{"value", r.value}, {"unit", r.unit}};
    if (!r.note.empty()) entry[r.section == "quantum_parameters" ? "regime" : "note"] = r.note;
    doc[r.section][r.name] = entry;
  }
  return doc;
}

inline void print_warnings(std::ostream& err, const std::vector<RegimeWarning>& warnings) {
  for (const auto& w : warnings) err << "warning[" << w.code << "]: " << w.message << '\n';
}

struct CommonOptions {
  std::string config;
  std::vector<std::string> sets;
  std::string n0, te, ti, b0, k, hall, polarization, out;
  bool json = false;
};

inline RunConfig resolve(const CommonOptions& o) {
  json doc = o.config.empty() ? json::object() : load_document(o.config);
  auto flag = [&](const std::string& value, const char* path) {
    if (!value.empty()) apply_override(doc, std::string(path) + "=" + json(value).dump());
  };
  flag(o.n0, "composition.n0");
  flag(o.te, "composition.Te");
  flag(o.ti, "composition.Ti");
  flag(o.b0, "composition.B0");
  flag(o.polarization, "carrier.polarization");
  flag(o.out, "output.dir");
  if (!o.k.empty()) {
    apply_override(doc, "carrier.k=" + json(o.k).dump());
    if (doc["carrier"].is_object()) doc["carrier"].erase("hall_parameter");
  }
  if (!o.hall.empty()) {
    apply_override(doc, "carrier.hall_parameter=" + o.hall);
    if (doc["carrier"].is_object()) doc["carrier"].erase("k");
  }
  for (const auto& s : o.sets) apply_override(doc, s);
  return parse_config(doc);
}

// ---------------------------------------------------------------- params

inline std::vector<ReportRow> params_report(const PlasmaComposition& comp, const PhysicalConstants& k = codata2018) {
  const DerivedQuantities dq = derive(comp, k);
  const QuantumParameters qp = quantum_parameters(dq, comp, k);
  const SpinPopulations sp = equilibrium_populations(comp, k);
  std::vector<ReportRow> rows{
      {"composition", "n0", comp.electron_density, "m^-3", ""},
      {"composition", "Te", comp.electron_temperature, "K", ""},
      {"composition", "Ti", comp.ion_temperature, "K", ""},
      {"composition", "B0", comp.magnetic_field, "T", ""},
      {"composition", "ion_mass", comp.ion_mass, "kg", ""},
      {"composition", "ion_charge", comp.ion_charge_number, "", ""},
      {"derived", "omega_pe", dq.omega_pe, "rad/s", ""},
      {"derived", "omega_ce", dq.omega_ce, "rad/s", ""},
      {"derived", "omega_ci", dq.omega_ci, "rad/s", ""},
      {"derived", "alfven_speed", dq.alfven_speed, "m/s", ""},
      {"derived", "sound_speed", dq.sound_speed, "m/s", ""},
      {"derived", "mass_density", dq.mass_density, "kg/m^3", ""},
      {"derived", "fermi_temperature", dq.fermi_temperature, "K", ""},
  };
  const RegimeReport regime = classify(comp, k);
  for (auto e : all_effects) {
    rows.push_back({"quantum_parameters", std::string(to_string(e)), parameter_value(e, qp), "",
                    std::string(to_string(regime.side(e)))});
  }
  rows.push_back({"spin_populations", "n_plus0", sp.n_plus0, "m^-3", ""});
  rows.push_back({"spin_populations", "n_minus0", sp.n_minus0, "m^-3", ""});
  rows.push_back({"spin_populations", "population_difference", sp.population_difference, "m^-3", ""});
  rows.push_back({"spin_populations", "magnetization", sp.magnetization, "A/m", ""});
  rows.push_back({"spin_populations", "brillouin_factor", sp.brillouin_factor, "", ""});
  return rows;
}

inline int cmd_params(const CommonOptions& o, const std::string& csv_path, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve(o);
  const PlasmaComposition& comp = require_composition(cfg);
  const auto rows = params_report(comp);
  const RegimeReport regime = classify(comp);
  if (o.json) {
    json doc = rows_to_json(rows);
    doc["warnings"] = json::array();
    for (const auto& w : regime.warnings) doc["warnings"].push_back({{"code", w.code}, {"message", w.message}});
    out << doc.dump(2) << '\n';
  } else {
    print_rows(out, rows);
  }
  print_warnings(err, regime.warnings);
  if (!csv_path.empty()) {
    auto f = open_output(csv_path);
    f << "section,quantity,value,unit,regime\n";
    for (const auto& r : rows) f << r.section << ',' << r.name << ',' << num(r.value) << ',' << r.unit << ',' << r.note << '\n';
  }
  return Success;
}

// ---------------------------------------------------------------- regime-map

struct RegimeMapResult {
  std::vector<RegimeCurve> curves;
  std::vector<std::string> skipped;
};

/// Field-independent families once, field-dependent families once per B0.
inline RegimeMapResult build_regime_map(const RegimeConfig& rc) {
  validate(rc.window);
  if (rc.fields.empty()) throw ValidationError("regime.fields", "need at least one B0");
  RegimeMapResult r;
  for (auto e : all_effects) {
    std::vector<std::optional<double>> fields;
    if (requires_field(e)) {
      for (double b : rc.fields) fields.emplace_back(b);
    } else {
      fields.emplace_back(std::nullopt);
    }
    for (const auto& b : fields) {
      try {
        r.curves.push_back(curve_for(e, b, rc.window, rc.samples));
      } catch (const DomainError&) {
        r.skipped.push_back(std::string(to_string(e)) + (b ? fmt::format(" (B0 = {} T)", *b) : std::string()));
      }
    }
  }
  return r;
}

inline json regime_metadata(const RegimeConfig& rc, const RegimeMapResult& r) {
  json meta = {
      {"constants", "CODATA 2018"},
      {"fermi_pressure_mass", "m_e"},
      {"fermi_pressure_note", "the Fermi parameter hbar^2 n0^(2/3) / (m k_B T_e) is evaluated with m = m_e"},
      {"density_range_per_m3", {rc.window.density_min, rc.window.density_max}},
      {"temperature_range_kelvin", {rc.window.temperature_min, rc.window.temperature_max}},
      {"fields_tesla", rc.fields},
      {"samples_per_curve", rc.samples},
      {"curves", r.curves.size()},
      {"skipped", r.skipped},
      {"empty_B0_column", "effect is independent of B0"},
  };
  return meta;
}

inline int cmd_regime_map(const CommonOptions& o, std::string csv_path, const std::string& svg_path,
                          const std::vector<std::string>& fields, std::size_t samples, std::ostream& out,
                          std::ostream& err) {
  RunConfig cfg = resolve(o);
  if (!fields.empty()) {
    cfg.regime.fields.clear();
    for (const auto& f : fields) cfg.regime.fields.push_back(parse_quantity(f, Dimension::MagneticField, "--field"));
  }
  if (samples != 0) cfg.regime.samples = samples;
  if (csv_path.empty()) csv_path = (std::filesystem::path(cfg.output_dir) / "regime_map.csv").string();
  const RegimeMapResult r = build_regime_map(cfg.regime);
  for (const auto& s : r.skipped) err << "warning[outside-window]: " << s << " unity locus does not cross the window; skipped\n";
  {
    auto f = open_output(csv_path);
    write_regime_csv(f, r.curves);
  }
  {
    auto f = open_output(csv_path + ".meta.json");
    f << regime_metadata(cfg.regime, r).dump(2) << '\n';
  }
  if (!svg_path.empty()) {
    auto f = open_output(svg_path);
    write_regime_svg(f, r.curves, cfg.regime.window);
  }
  out << "curves = " << r.curves.size() << '\n' << "rows = " << r.curves.size() * cfg.regime.samples << '\n'
      << "csv = " << csv_path << '\n';
  if (!svg_path.empty()) out << "svg = " << svg_path << '\n';
  return Success;
}

// ---------------------------------------------------------------- dispersion

inline int cmd_dispersion(const CommonOptions& o, const std::string& csv_path, std::ostream& out, std::ostream&) {
  const RunConfig cfg = resolve(o);
  const PlasmaComposition& comp = require_composition(cfg);
  const DerivedQuantities dq = derive(comp);
  std::ostringstream buf;
  buf << "polarization,hall_parameter,k_rad_per_m,omega_rad_per_s,vg_m_per_s,vgp_m2_per_s\n";
  const auto halls = spinalfven::detail::log_space(cfg.scan.hall_min, cfg.scan.hall_max, cfg.scan.points);
  for (auto pol : {Polarization::RightHand, Polarization::LeftHand}) {
    for (double hall : halls) {
      if (pol == Polarization::LeftHand && hall >= 1.0) continue;
      const CarrierWave w = dispersion(hall * dq.omega_ci / dq.alfven_speed, pol, dq);
      buf << to_string(pol) << ',' << num(w.hall_parameter) << ',' << num(w.wavenumber) << ',' << num(w.omega) << ','
          << num(w.group_velocity) << ',' << num(w.group_dispersion) << '\n';
    }
  }
  if (csv_path.empty()) {
    out << buf.str();
  } else {
    auto f = open_output(csv_path);
    f << buf.str();
    out << "csv = " << csv_path << '\n';
  }
  return Success;
}

// ---------------------------------------------------------------- coefficients

struct CarrierSetup {
  PlasmaComposition comp;
  DerivedQuantities dq;
  CarrierWave carrier;
  NlsCoefficients coeffs;
};

inline CarrierSetup carrier_setup(const RunConfig& cfg) {
  CarrierSetup s{};
  s.comp = require_composition(cfg);
  s.dq = derive(s.comp);
  s.carrier = dispersion(carrier_wavenumber(cfg, s.dq), cfg.carrier.polarization, s.dq);
  s.coeffs = nls_coefficients(s.carrier, s.dq, s.comp);
  return s;
}

inline int cmd_coefficients(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve(o);
  const CarrierSetup s = carrier_setup(cfg);
  const double two_fluid = quantum_parameters(s.dq, s.comp).two_fluid_nonlinear;
  std::vector<ReportRow> rows{
      {"carrier", "k", s.carrier.wavenumber, "rad/m", std::string(to_string(s.carrier.polarization))},
      {"carrier", "hall_parameter", s.carrier.hall_parameter, "", ""},
      {"carrier", "omega", s.carrier.omega, "rad/s", ""},
      {"carrier", "group_velocity", s.carrier.group_velocity, "m/s", ""},
      {"carrier", "group_dispersion", s.carrier.group_dispersion, "m^2/s", ""},
      {"envelope", "dispersion_coeff", s.coeffs.dispersion_coeff, "m^2/s", ""},
      {"envelope", "nonlinear_coeff", s.coeffs.nonlinear_coeff, "rad/s",
       s.coeffs.nonlinear_coeff * s.coeffs.group_dispersion() > 0.0 ? "focusing" : "defocusing"},
      {"envelope", "classical_q", s.coeffs.classical_q, "rad/s", ""},
      {"envelope", "classical_q_weak_field", s.coeffs.classical_q_weak_field, "rad/s", ""},
      {"envelope", "spin_correction_factor", s.coeffs.spin_correction_factor, "", ""},
      {"envelope", "two_fluid_nonlinear", two_fluid, "", ""},
      {"envelope", "spin_alfven_speed_correction", spin_alfven_speed_correction(s.comp, s.dq), "", ""},
  };
  if (o.json) {
    out << rows_to_json(rows).dump(2) << '\n';
  } else {
    print_rows(out, rows);
  }
  print_warnings(err, weak_field_warnings(s.comp, s.dq));
  return Success;
}

// ---------------------------------------------------------------- evolve

struct PreparedRun {
  EnvelopeState initial;
  SolverOptions options;
  double dt;
  std::size_t steps;
  std::size_t snapshot_every;
  std::filesystem::path output_dir;
};

/// Everything that can be rejected is rejected here, before any file is
/// touched.
inline PreparedRun prepare_run(const RunConfig& cfg) {
  const CarrierSetup s = carrier_setup(cfg);
  if (!cfg.solver.length) throw ValidationError("solver.length", "missing");
  const Grid grid{cfg.solver.points, *cfg.solver.length};
  validate(grid);
  PreparedRun run{};
  const double b0 = s.comp.magnetic_field;
  if (cfg.initial.kind == InitialConfig::Kind::Soliton) {
    SolitonSpec spec{};
    if (cfg.initial.width) {
      if (!(s.coeffs.nonlinear_coeff * s.coeffs.group_dispersion() > 0.0)) {
        check_soliton({1.0}, s.coeffs, b0, grid);  // throws the existence message
      }
      if (!(*cfg.initial.width > 0.0)) throw ValidationError("initial.width", "must be > 0");
      spec.peak_amplitude = soliton_amplitude_for_width(*cfg.initial.width, s.coeffs, b0);
    } else {
      spec.peak_amplitude = *cfg.initial.peak_amplitude;
    }
    spec.center = cfg.initial.center;
    spec.phase = cfg.initial.phase;
    run.initial = initialize_soliton(spec, s.coeffs, b0, grid);
  } else {
    run.initial = initialize_uniform(cfg.initial.amplitude, cfg.initial.perturbation, cfg.initial.mode, s.coeffs, b0, grid);
  }
  run.options.cfl_safety = cfg.solver.cfl_safety;
  run.options.dealias = cfg.solver.dealias;
  if (!(run.options.cfl_safety > 0.0)) throw ValidationError("solver.cfl_safety", "must be > 0");
  const double guard = max_time_step(grid, s.coeffs, run.options.cfl_safety);
  if (cfg.solver.dt) {
    run.dt = *cfg.solver.dt;
  } else {
    const double fraction = cfg.solver.dt_fraction.value_or(0.5);
    if (!(fraction > 0.0) || fraction > 1.0) throw ValidationError("solver.dt_fraction", "must lie in (0, 1]");
    if (!std::isfinite(guard)) throw ValidationError("solver.dt", "v_g' = 0: give dt explicitly");
    run.dt = fraction * guard;
  }
  if (!(run.dt > 0.0) || !std::isfinite(run.dt)) throw ValidationError("solver.dt", "must be finite and > 0");
  if (run.dt > guard * (1.0 + 1e-12)) {
    throw ValidationError("solver.dt", fmt::format("{} s exceeds the step guard {} s", run.dt, guard));
  }
  if (cfg.solver.steps == 0) throw ValidationError("solver.steps", "must be > 0");
  run.steps = cfg.solver.steps;
  run.snapshot_every = cfg.solver.snapshot_every;
  run.output_dir = cfg.output_dir;
  return run;
}

struct RunSummary {
  std::size_t steps = 0;
  double time = 0.0;
  double norm_drift = 0.0;
  double momentum_drift = 0.0;
  double hamiltonian_drift = 0.0;
};

/// Runs and writes timeseries.csv plus snapshots/. On blow-up the partial
/// outputs are kept, a FAILED line is appended and BlowUpError propagates.
inline RunSummary execute_run(const PreparedRun& run) {
  namespace fs = std::filesystem;
  fs::create_directories(run.output_dir / "snapshots");
  auto series = open_output(run.output_dir / "timeseries.csv");
  series << timeseries_header << '\n';
  auto snapshot = [&](const SplitStepSolver& s) {
    write_snapshot(run.output_dir / "snapshots" / fmt::format("snapshot_{:06d}.csv", s.step_index()), s.grid(),
                   s.amplitude());
  };

  SplitStepSolver solver(run.initial, run.options);
  const ConservedDiagnostics d0 = solver.diagnostics();
  write_timeseries_row(series, 0, solver.time(), d0, max_amplitude(run.initial.amplitude));
  snapshot(solver);
  ConservedDiagnostics d = d0;
  try {
    for (std::size_t i = 1; i <= run.steps; ++i) {
      solver.step(run.dt);
      d = solver.diagnostics();
      write_timeseries_row(series, solver.step_index(), solver.time(), d, max_amplitude(solver.amplitude()));
      if ((run.snapshot_every != 0 && i % run.snapshot_every == 0) || i == run.steps) snapshot(solver);
    }
  } catch (const BlowUpError& e) {
    series << "FAILED: " << e.what() << '\n';
    series.flush();
    throw;
  }

  auto rel = [](double now, double ref, double scale) { return scale > 0.0 ? std::abs(now - ref) / scale : 0.0; };
  RunSummary sum;
  sum.steps = run.steps;
  sum.time = solver.time();
  sum.norm_drift = rel(d.norm, d0.norm, d0.norm);
  sum.momentum_drift = rel(d.momentum, d0.momentum, std::max(std::abs(d0.momentum), d0.momentum_scale()));
  sum.hamiltonian_drift = rel(d.hamiltonian, d0.hamiltonian, std::abs(d0.hamiltonian));
  return sum;
}

inline void print_summary(std::ostream& out, const PreparedRun& run, const RunSummary& s) {
  out << "output = " << run.output_dir.string() << '\n'
      << "steps = " << s.steps << '\n'
      << "dt = " << num(run.dt) << " s\n"
      << "t_final = " << num(s.time) << " s\n"
      << "norm_drift = " << num(s.norm_drift) << '\n'
      << "momentum_drift = " << num(s.momentum_drift) << '\n'
      << "hamiltonian_drift = " << num(s.hamiltonian_drift) << '\n';
}

inline int report_error(std::ostream& err, const std::exception& e, int code) {
  err << "error: " << e.what() << '\n';
  return code;
}

/// Runs one configuration, mapping errors to exit codes.
inline int evolve_config(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const PreparedRun run = prepare_run(cfg);
    const RunSummary s = execute_run(run);
    print_summary(out, run, s);
    return Success;
  } catch (const ValidationError& e) {
    return report_error(err, e, Invalid);
  } catch (const DomainError& e) {
    return report_error(err, e, Invalid);
  } catch (const BlowUpError& e) {
    return report_error(err, e, BlowUp);
  }
}

// ---------------------------------------------------------------- sweep

inline int cmd_sweep(const std::vector<std::string>& configs, const std::vector<std::string>& sets, unsigned threads,
                     std::ostream& out, std::ostream& err) {
  if (configs.empty()) throw ValidationError("sweep", "no configuration files given");
  std::vector<RunConfig> runs;
  std::set<std::filesystem::path> dirs;
  for (const auto& path : configs) {
    CommonOptions o;
    o.config = path;
    o.sets = sets;
    runs.push_back(resolve(o));
    const auto dir = std::filesystem::weakly_canonical(std::filesystem::absolute(runs.back().output_dir));
    if (!dirs.insert(dir).second) {
      throw ValidationError("output.dir", "'" + runs.back().output_dir + "' is used by more than one run");
    }
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(runs.size()));

  std::vector<std::ostringstream> outs(runs.size());
  std::vector<std::ostringstream> errs(runs.size());
  std::vector<int> codes(runs.size(), Success);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < runs.size(); i = next++) {
          try {
            codes[i] = evolve_config(runs[i], outs[i], errs[i]);
          } catch (const std::exception& e) {
            codes[i] = report_error(errs[i], e, Failure);
          }
        }
      });
    }
  }
  int worst = Success;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    out << "[" << configs[i] << "] exit " << codes[i] << '\n' << outs[i].str();
    err << errs[i].str();
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

// ---------------------------------------------------------------- entry

inline void add_common(CLI::App* cmd, CommonOptions& o, bool carrier) {
  cmd->add_option("-c,--config", o.config, "JSON run configuration");
  cmd->add_option("--set", o.sets, "override a config value, e.g. composition.n0=\"1e25 m^-3\"");
  cmd->add_option("--n0", o.n0, "electron density with unit, e.g. \"1e25 m^-3\"");
  cmd->add_option("--Te", o.te, "electron temperature with unit (K, eV, keV)");
  cmd->add_option("--Ti", o.ti, "ion temperature with unit (default: Te)");
  cmd->add_option("--B0", o.b0, "background field with unit (T, mT, G)");
  cmd->add_option("-o,--out", o.out, "output directory (output.dir)");
  if (carrier) {
    cmd->add_option("--k", o.k, "carrier wavenumber with unit (rad/m)");
    cmd->add_option("--hall", o.hall, "carrier wavenumber as k c_A / omega_ci");
    cmd->add_option("--polarization", o.polarization, "left or right");
  }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin-modified Alfven wave envelopes and quantum regime maps", "spinalfven"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "spinalfven 0.1.0");

  CommonOptions params_o, map_o, disp_o, coef_o, evolve_o;
  std::string params_csv, map_csv, map_svg, disp_csv;
  std::vector<std::string> map_fields, sweep_configs, sweep_sets;
  std::size_t map_samples = 0;
  unsigned sweep_threads = 0;

  auto* params = app.add_subcommand("params", "derived quantities, quantum parameters and spin populations");
  add_common(params, params_o, false);
  params->add_flag("--json", params_o.json, "machine-readable output");
  params->add_option("--csv", params_csv, "also write the report as CSV");

  auto* map = app.add_subcommand("regime-map", "unity loci of the five quantum parameters");
  add_common(map, map_o, false);
  map->add_option("--csv", map_csv, "CSV path (default <output.dir>/regime_map.csv)");
  map->add_option("--svg", map_svg, "also write a log-log SVG plot");
  map->add_option("--field", map_fields, "B0 with unit; repeatable (default 1e-3, 1, 1e3 T)");
  map->add_option("--samples", map_samples, "points per curve (default 100)");

  auto* disp = app.add_subcommand("dispersion", "omega, v_g and v_g' over a k c_A / omega_ci scan");
  add_common(disp, disp_o, false);
  disp->add_option("--csv", disp_csv, "write to a file instead of stdout");

  auto* coef = app.add_subcommand("coefficients", "envelope equation coefficients for a carrier");
  add_common(coef, coef_o, true);
  coef->add_flag("--json", coef_o.json, "machine-readable output");

  auto* evolve = app.add_subcommand("evolve", "integrate the envelope equation");
  add_common(evolve, evolve_o, true);

  auto* sweep = app.add_subcommand("sweep", "run several evolve configurations concurrently");
  sweep->add_option("configs", sweep_configs, "configuration files, each with its own output.dir")->required();
  sweep->add_option("--set", sweep_sets, "override applied to every configuration");
  sweep->add_option("-j,--threads", sweep_threads, "worker threads (default: hardware concurrency)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : Invalid;
  }

  try {
    if (*params) return cmd_params(params_o, params_csv, out, err);
    if (*map) return cmd_regime_map(map_o, map_csv, map_svg, map_fields, map_samples, out, err);
    if (*disp) return cmd_dispersion(disp_o, disp_csv, out, err);
    if (*coef) return cmd_coefficients(coef_o, out, err);
    if (*evolve) return evolve_config(resolve(evolve_o), out, err);
    if (*sweep) return cmd_sweep(sweep_configs, sweep_sets, sweep_threads, out, err);
  } catch (const ValidationError& e) {
    return report_error(err, e, Invalid);
  } catch (const DomainError& e) {
    return report_error(err, e, Invalid);
  } catch (const BlowUpError& e) {
    return report_error(err, e, BlowUp);
  } catch (const std::exception& e) {
    return report_error(err, e, Failure);
  }
  return Invalid;
}

}  // namespace spinalfven::cli
