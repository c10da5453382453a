#pragma once

// Run configuration: a JSON document whose dimensional fields are strings
// "<number> <unit>". Overrides use dotted paths, e.g.
// composition.n0="6e25 m^-3".

#include <fstream>
#include <optional>
#include <tuple>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinalfven/dispersion.hpp"
#include "spinalfven/errors.hpp"
#include "spinalfven/nls_solver.hpp"
#include "spinalfven/plasma.hpp"
#include "spinalfven/regime_map.hpp"
#include "spinalfven/units.hpp"

namespace spinalfven::cli {

using nlohmann::json;

struct CarrierConfig {
  std::optional<double> wavenumber;      // rad/m
  std::optional<double> hall_parameter;  // k c_A / omega_ci
  Polarization polarization = Polarization::LeftHand;
};

struct SolverConfig {
  std::size_t points = 1024;
  std::optional<double> length;       // m
  std::optional<double> dt;           // s
  std::optional<double> dt_fraction;  // of the guard limit
  std::size_t steps = 1000;
  std::size_t snapshot_every = 0;     // 0: initial and final only
  bool dealias = false;
  double cfl_safety = 2.0;
};

struct InitialConfig {
  enum class Kind { Soliton, Uniform } kind = Kind::Soliton;
  std::optional<double> peak_amplitude;  // T
  std::optional<double> width;           // m, alternative to peak_amplitude
  double center = 0.0;                   // m
  double phase = 0.0;                    // rad
  double amplitude = 0.0;                // T, uniform background
  double perturbation = 1e-4;
  std::size_t mode = 1;
};

struct RegimeConfig {
  RegimeWindow window{};
  std::vector<double> fields{1e-3, 1.0, 1e3};
  std::size_t samples = 100;
};

struct ScanConfig {
  double hall_min = 1e-3;
  double hall_max = 0.9;
  std::size_t points = 50;
};

struct RunConfig {
  std::optional<PlasmaComposition> composition;
  CarrierConfig carrier;
  SolverConfig solver;
  InitialConfig initial;
  RegimeConfig regime;
  ScanConfig scan;
  std::string output_dir = "out";
};

namespace detail {

inline const json* find(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

inline double quantity(const json& j, const std::string& path, Dimension d) {
  if (!j.is_string()) throw ValidationError(path, "expected a string '<number> <unit>'");
  return parse_quantity(j.get<std::string>(), d, path);
}

inline double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ValidationError(path, "expected a number");
  return j.get<double>();
}

inline std::size_t count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ValidationError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ValidationError(path, "expected true or false");
  return j.get<bool>();
}

inline std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path, "expected a string");
  return j.get<std::string>();
}

inline void reject_unknown(const json& block, const std::string& path, std::initializer_list<const char*> known) {
  if (!block.is_object()) throw ValidationError(path, "expected an object");
  for (const auto& [key, value] : block.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ValidationError(path.empty() ? key : path + "." + key, "unknown key");
  }
}

inline std::pair<double, double> range(const json& j, const std::string& path, Dimension d) {
  if (!j.is_array() || j.size() != 2) throw ValidationError(path, "expected [min, max]");
  return {quantity(j[0], path, d), quantity(j[1], path, d)};
}

}  // namespace detail

/// Applies `path=value` overrides; the value is read as JSON when it parses,
/// otherwise as a string.
inline void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ValidationError("--set", "expected path=value, got '" + assignment + "'");
  const std::string path = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  json* node = &doc;
  std::stringstream parts(path);
  std::string key;
  std::vector<std::string> keys;
  while (std::getline(parts, key, '.')) keys.push_back(key);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i].empty()) throw ValidationError("--set", "empty key in '" + path + "'");
    if (!node->is_object()) {
      if (!node->is_null()) throw ValidationError(path, "parent is not an object");
      *node = json::object();
    }
    node = &(*node)[keys[i]];
  }
  *node = std::move(value);
}

inline json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot open '" + path + "'");
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw ValidationError("config", "'" + path + "' is not a JSON object");
  return doc;
}

inline RunConfig parse_config(const json& doc, const PhysicalConstants& k = codata2018) {
  using namespace detail;
  RunConfig cfg;
  if (!doc.is_object()) throw ValidationError("config", "expected a JSON object");
  reject_unknown(doc, "", {"composition", "carrier", "solver", "initial", "regime", "scan", "output"});

  if (const json* c = find(doc, "composition")) {
    reject_unknown(*c, "composition", {"n0", "Te", "Ti", "B0", "ion_mass", "ion_charge"});
    auto required = [&](const char* key, Dimension d) {
      const json* v = find(*c, key);
      if (!v) throw ValidationError(std::string("composition.") + key, "missing");
      return quantity(*v, std::string("composition.") + key, d);
    };
    PlasmaComposition comp{};
    comp.electron_density = required("n0", Dimension::Density);
    comp.electron_temperature = required("Te", Dimension::Temperature);
    comp.ion_temperature = find(*c, "Ti") ? quantity(c->at("Ti"), "composition.Ti", Dimension::Temperature)
                                          : comp.electron_temperature;
    comp.magnetic_field = required("B0", Dimension::MagneticField);
    comp.ion_mass = find(*c, "ion_mass") ? quantity(c->at("ion_mass"), "composition.ion_mass", Dimension::Mass)
                                         : k.proton_mass;
    comp.ion_charge_number = find(*c, "ion_charge") ? number(c->at("ion_charge"), "composition.ion_charge") : 1.0;
    cfg.composition = comp;
  }

  if (const json* c = find(doc, "carrier")) {
    reject_unknown(*c, "carrier", {"k", "hall_parameter", "polarization"});
    if (const json* v = find(*c, "k")) cfg.carrier.wavenumber = quantity(*v, "carrier.k", Dimension::Wavenumber);
    if (const json* v = find(*c, "hall_parameter")) cfg.carrier.hall_parameter = number(*v, "carrier.hall_parameter");
    if (cfg.carrier.wavenumber && cfg.carrier.hall_parameter) {
      throw ValidationError("carrier", "give either k or hall_parameter, not both");
    }
    if (const json* v = find(*c, "polarization")) {
      const std::string p = string(*v, "carrier.polarization");
      if (p == "left") {
        cfg.carrier.polarization = Polarization::LeftHand;
      } else if (p == "right") {
        cfg.carrier.polarization = Polarization::RightHand;
      } else {
        throw ValidationError("carrier.polarization", "expected 'left' or 'right'");
      }
    }
  }

  if (const json* s = find(doc, "solver")) {
    reject_unknown(*s, "solver", {"points", "length", "dt", "dt_fraction", "steps", "snapshot_every", "dealias", "cfl_safety"});
    if (const json* v = find(*s, "points")) cfg.solver.points = count(*v, "solver.points");
    if (const json* v = find(*s, "length")) cfg.solver.length = quantity(*v, "solver.length", Dimension::Length);
    if (const json* v = find(*s, "dt")) cfg.solver.dt = quantity(*v, "solver.dt", Dimension::Time);
    if (const json* v = find(*s, "dt_fraction")) cfg.solver.dt_fraction = number(*v, "solver.dt_fraction");
    if (cfg.solver.dt && cfg.solver.dt_fraction) throw ValidationError("solver", "give either dt or dt_fraction, not both");
    if (const json* v = find(*s, "steps")) cfg.solver.steps = count(*v, "solver.steps");
    if (const json* v = find(*s, "snapshot_every")) cfg.solver.snapshot_every = count(*v, "solver.snapshot_every");
    if (const json* v = find(*s, "dealias")) cfg.solver.dealias = boolean(*v, "solver.dealias");
    if (const json* v = find(*s, "cfl_safety")) cfg.solver.cfl_safety = number(*v, "solver.cfl_safety");
  }

  if (const json* i = find(doc, "initial")) {
    reject_unknown(*i, "initial", {"type", "peak_amplitude", "width", "center", "phase", "amplitude", "perturbation", "mode"});
    const std::string type = find(*i, "type") ? string(i->at("type"), "initial.type") : "soliton";
    if (type == "soliton") {
      cfg.initial.kind = InitialConfig::Kind::Soliton;
      if (const json* v = find(*i, "peak_amplitude")) {
        cfg.initial.peak_amplitude = quantity(*v, "initial.peak_amplitude", Dimension::MagneticField);
      }
      if (const json* v = find(*i, "width")) cfg.initial.width = quantity(*v, "initial.width", Dimension::Length);
      if (cfg.initial.peak_amplitude.has_value() == cfg.initial.width.has_value()) {
        throw ValidationError("initial", "soliton needs exactly one of peak_amplitude or width");
      }
      if (const json* v = find(*i, "center")) cfg.initial.center = quantity(*v, "initial.center", Dimension::Length);
      if (const json* v = find(*i, "phase")) cfg.initial.phase = number(*v, "initial.phase");
    } else if (type == "uniform") {
      cfg.initial.kind = InitialConfig::Kind::Uniform;
      const json* a = find(*i, "amplitude");
      if (!a) throw ValidationError("initial.amplitude", "missing");
      cfg.initial.amplitude = quantity(*a, "initial.amplitude", Dimension::MagneticField);
      if (const json* v = find(*i, "perturbation")) cfg.initial.perturbation = number(*v, "initial.perturbation");
      if (const json* v = find(*i, "mode")) cfg.initial.mode = count(*v, "initial.mode");
    } else {
      throw ValidationError("initial.type", "expected 'soliton' or 'uniform'");
    }
  }

  if (const json* r = find(doc, "regime")) {
    reject_unknown(*r, "regime", {"density_range", "temperature_range", "fields", "samples"});
    if (const json* v = find(*r, "density_range")) {
      std::tie(cfg.regime.window.density_min, cfg.regime.window.density_max) =
          range(*v, "regime.density_range", Dimension::Density);
    }
    if (const json* v = find(*r, "temperature_range")) {
      std::tie(cfg.regime.window.temperature_min, cfg.regime.window.temperature_max) =
          range(*v, "regime.temperature_range", Dimension::Temperature);
    }
    if (const json* v = find(*r, "fields")) {
      if (!v->is_array() || v->empty()) throw ValidationError("regime.fields", "expected a non-empty list");
      cfg.regime.fields.clear();
      for (const auto& f : *v) cfg.regime.fields.push_back(quantity(f, "regime.fields", Dimension::MagneticField));
    }
    if (const json* v = find(*r, "samples")) cfg.regime.samples = count(*v, "regime.samples");
  }

  if (const json* s = find(doc, "scan")) {
    reject_unknown(*s, "scan", {"hall_min", "hall_max", "points"});
    if (const json* v = find(*s, "hall_min")) cfg.scan.hall_min = number(*v, "scan.hall_min");
    if (const json* v = find(*s, "hall_max")) cfg.scan.hall_max = number(*v, "scan.hall_max");
    if (const json* v = find(*s, "points")) cfg.scan.points = count(*v, "scan.points");
    if (!(cfg.scan.hall_min > 0.0) || !(cfg.scan.hall_max > cfg.scan.hall_min)) {
      throw ValidationError("scan", "need 0 < hall_min < hall_max");
    }
    if (cfg.scan.points < 2) throw ValidationError("scan.points", "need at least 2");
  }

  if (const json* o = find(doc, "output")) {
    reject_unknown(*o, "output", {"dir"});
    if (const json* v = find(*o, "dir")) cfg.output_dir = string(*v, "output.dir");
  }
  return cfg;
}

inline const PlasmaComposition& require_composition(const RunConfig& cfg) {
  if (!cfg.composition) throw ValidationError("composition", "missing (set it in the config or with --n0/--Te/--B0)");
  validate(*cfg.composition);
  return *cfg.composition;
}

inline double carrier_wavenumber(const RunConfig& cfg, const DerivedQuantities& dq) {
  if (cfg.carrier.wavenumber) return *cfg.carrier.wavenumber;
  if (cfg.carrier.hall_parameter) return *cfg.carrier.hall_parameter * dq.omega_ci / dq.alfven_speed;
  throw ValidationError("carrier", "missing k or hall_parameter");
}

}  // namespace spinalfven::cli
