#pragma once

// Dimensional quantities written as "<number> <unit>", e.g. "1e25 m^-3",
// "10 eV", "1 mT". The unit is mandatory.

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "spinalfven/constants.hpp"
#include "spinalfven/errors.hpp"

namespace spinalfven {

enum class Dimension { Density, Temperature, MagneticField, Length, Wavenumber, Time, Mass };

inline std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::Density: return "density";
    case Dimension::Temperature: return "temperature";
    case Dimension::MagneticField: return "magnetic field";
    case Dimension::Length: return "length";
    case Dimension::Wavenumber: return "wavenumber";
    case Dimension::Time: return "time";
    case Dimension::Mass: return "mass";
  }
  return "unknown";
}

struct UnitEntry {
  Dimension dimension;
  std::string_view symbol;
  double to_si;
};

inline const auto& unit_table() {
  const double ev_kelvin = codata2018.elementary_charge / codata2018.boltzmann;
  static const std::array<UnitEntry, 21> table{{
      {Dimension::Density, "m^-3", 1.0},
      {Dimension::Density, "cm^-3", 1e6},
      {Dimension::Temperature, "K", 1.0},
      {Dimension::Temperature, "eV", ev_kelvin},
      {Dimension::Temperature, "keV", 1e3 * ev_kelvin},
      {Dimension::MagneticField, "T", 1.0},
      {Dimension::MagneticField, "mT", 1e-3},
      {Dimension::MagneticField, "G", 1e-4},
      {Dimension::Length, "m", 1.0},
      {Dimension::Length, "cm", 1e-2},
      {Dimension::Length, "mm", 1e-3},
      {Dimension::Length, "km", 1e3},
      {Dimension::Wavenumber, "rad/m", 1.0},
      {Dimension::Wavenumber, "1/m", 1.0},
      {Dimension::Wavenumber, "m^-1", 1.0},
      {Dimension::Time, "s", 1.0},
      {Dimension::Time, "ms", 1e-3},
      {Dimension::Time, "us", 1e-6},
      {Dimension::Time, "ns", 1e-9},
      {Dimension::Mass, "kg", 1.0},
      {Dimension::Mass, "u", codata2018.atomic_mass_unit},
  }};
  return table;
}

inline std::string allowed_units(Dimension d) {
  std::string out;
  for (const auto& u : unit_table()) {
    if (u.dimension != d) continue;
    if (!out.empty()) out += ", ";
    out += u.symbol;
  }
  return out;
}

/// Parses "<number> <unit>" into SI (kelvin for temperatures). `field` names
/// the offending input in error messages.
inline double parse_quantity(std::string_view text, Dimension d, const std::string& field) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end == text.data()) {
    throw ValidationError(field, "expected '<number> <unit>', got '" + std::string(text) + "'");
  }
  const std::string_view unit = trim(text.substr(static_cast<std::size_t>(end - text.data())));
  if (unit.empty()) {
    throw ValidationError(field, "missing unit (allowed for " + std::string(to_string(d)) + ": " +
                                     allowed_units(d) + ")");
  }
  for (const auto& u : unit_table()) {
    if (u.dimension == d && u.symbol == unit) {
      if (!std::isfinite(value)) throw ValidationError(field, "must be finite");
      return value * u.to_si;
    }
  }
  throw ValidationError(field, "unit '" + std::string(unit) + "' is not a " + std::string(to_string(d)) +
                                   " unit (allowed: " + allowed_units(d) + ")");
}

}  // namespace spinalfven
