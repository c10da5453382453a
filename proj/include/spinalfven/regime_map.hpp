#pragma once

// Loci in the (n0, T_e) plane where a dimensionless quantum parameter equals
// one, and per-point regime classification.
//
// The Fermi parameter T_F / T_e is written with the electron mass.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinalfven/constants.hpp"
#include "spinalfven/dispersion.hpp"
#include "spinalfven/errors.hpp"
#include "spinalfven/plasma.hpp"
#include "spinalfven/spin_fluid.hpp"

namespace spinalfven {

enum class QuantumEffect {
  FermiPressure,
  BohmDeBroglie,
  SingleFluidAlfven,
  SingleFluidAcoustic,
  TwoFluidNonlinear,
};

inline constexpr std::array<QuantumEffect, 5> all_effects{
    QuantumEffect::FermiPressure, QuantumEffect::BohmDeBroglie, QuantumEffect::SingleFluidAlfven,
    QuantumEffect::SingleFluidAcoustic, QuantumEffect::TwoFluidNonlinear};

inline std::string_view to_string(QuantumEffect e) {
  switch (e) {
    case QuantumEffect::FermiPressure: return "fermi_pressure";
    case QuantumEffect::BohmDeBroglie: return "bohm_de_broglie";
    case QuantumEffect::SingleFluidAlfven: return "single_fluid_alfven";
    case QuantumEffect::SingleFluidAcoustic: return "single_fluid_acoustic";
    case QuantumEffect::TwoFluidNonlinear: return "two_fluid_nonlinear";
  }
  return "unknown";
}

inline bool requires_field(QuantumEffect e) {
  return e == QuantumEffect::SingleFluidAcoustic || e == QuantumEffect::TwoFluidNonlinear;
}

inline double parameter_value(QuantumEffect e, const QuantumParameters& qp) {
  switch (e) {
    case QuantumEffect::FermiPressure: return qp.fermi_ratio;
    case QuantumEffect::BohmDeBroglie: return qp.bohm_debroglie;
    case QuantumEffect::SingleFluidAlfven: return qp.single_fluid_alfven;
    case QuantumEffect::SingleFluidAcoustic: return qp.single_fluid_acoustic;
    case QuantumEffect::TwoFluidNonlinear: return qp.two_fluid_nonlinear;
  }
  return 0.0;
}

struct IonSpecies {
  double mass;                // kg
  double charge_number = 1.0;
};

inline IonSpecies proton(const PhysicalConstants& k = codata2018) { return {k.proton_mass, 1.0}; }

struct RegimePoint {
  double density;      // n0, m^-3
  double temperature;  // T_e, K
};

struct RegimeCurve {
  QuantumEffect effect;
  std::optional<double> fixed_field;  // B0 in T, only for field-dependent effects
  std::vector<RegimePoint> points;
};

/// Rectangle of the (n0, T_e) plane in which curves are sampled.
struct RegimeWindow {
  double density_min = 1e20;
  double density_max = 1e36;
  double temperature_min = 1e2;
  double temperature_max = 1e9;
};

inline void validate(const RegimeWindow& w) {
  auto check = [](double lo, double hi, const char* field) {
    if (!(lo > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw ValidationError(field, "bounds must be finite and > 0");
    }
    if (!(hi > lo)) throw ValidationError(field, "empty range: max must exceed min");
  };
  check(w.density_min, w.density_max, "density_range");
  check(w.temperature_min, w.temperature_max, "temperature_range");
}

namespace detail {

// Temperature on the unity locus as a function of density (sloped and
// horizontal families).
inline double locus_temperature(QuantumEffect e, double n0, double b0,
                                const PhysicalConstants& k) {
  const double hbar = k.planck_hbar;
  const double c = k.speed_of_light;
  switch (e) {
    case QuantumEffect::FermiPressure: return fermi_temperature(n0, k);
    case QuantumEffect::BohmDeBroglie: return hbar * electron_plasma_frequency(n0, k) / k.boltzmann;
    case QuantumEffect::SingleFluidAlfven: {
      const double wpe = electron_plasma_frequency(n0, k);
      return hbar * hbar * wpe * wpe / (k.electron_mass * c * c * k.boltzmann);
    }
    case QuantumEffect::SingleFluidAcoustic: return k.bohr_magneton * b0 / k.boltzmann;
    case QuantumEffect::TwoFluidNonlinear: break;
  }
  throw DomainError("two-fluid locus is vertical; it has no temperature parametrisation");
}

// Inverse of locus_temperature for the sloped families.
inline double locus_density(QuantumEffect e, double te, const PhysicalConstants& k) {
  const double hbar = k.planck_hbar;
  const double c = k.speed_of_light;
  const double e2 = k.elementary_charge * k.elementary_charge;
  switch (e) {
    case QuantumEffect::FermiPressure: {
      const double kf2 = 2.0 * k.electron_mass * k.boltzmann * te / (hbar * hbar);
      return std::pow(kf2, 1.5) / (3.0 * std::numbers::pi * std::numbers::pi);
    }
    case QuantumEffect::BohmDeBroglie: {
      const double w = k.boltzmann * te / hbar;
      return k.vacuum_permittivity * k.electron_mass * w * w / e2;
    }
    case QuantumEffect::SingleFluidAlfven: {
      const double w2 = te * k.electron_mass * c * c * k.boltzmann / (hbar * hbar);
      return k.vacuum_permittivity * k.electron_mass * w2 / e2;
    }
    default: break;
  }
  throw DomainError("locus has no density parametrisation");
}

inline std::vector<double> log_space(double lo, double hi, std::size_t samples) {
  std::vector<double> out(samples);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < samples; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(samples - 1);
    out[i] = std::exp(a + (b - a) * f);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace detail

/// Density of the vertical two-fluid line, mu_B B0 / (m_i c_A^2) = 1, i.e.
/// n0 = Z B0 / (mu_B mu0).
inline double two_fluid_unity_density(double b0, const IonSpecies& ion = {codata2018.proton_mass},
                                      const PhysicalConstants& k = codata2018) {
  return ion.charge_number * b0 / (k.bohr_magneton * k.vacuum_permeability);
}

/// Samples the part of the effect's unity locus that lies inside `window`,
/// log-uniformly along the free coordinate, in increasing order.
inline RegimeCurve curve_for(QuantumEffect effect, std::optional<double> b0,
                             const RegimeWindow& window, std::size_t samples,
                             const IonSpecies& ion = {codata2018.proton_mass},
                             const PhysicalConstants& k = codata2018) {
  validate(window);
  if (samples < 2) throw ValidationError("samples", "need at least 2 samples");
  if (requires_field(effect)) {
    if (!b0) throw ValidationError("B0", std::string(to_string(effect)) + " curve needs a magnetic field");
    if (!(*b0 > 0.0) || !std::isfinite(*b0)) throw ValidationError("B0", "must be finite and > 0");
  } else {
    b0.reset();
  }

  RegimeCurve curve{effect, b0, {}};
  curve.points.reserve(samples);
  auto unsatisfiable = [&] {
    return DomainError(std::string(to_string(effect)) + " unity locus does not cross the window");
  };

  switch (effect) {
    case QuantumEffect::TwoFluidNonlinear: {
      const double n = two_fluid_unity_density(*b0, ion, k);
      if (n < window.density_min || n > window.density_max) throw unsatisfiable();
      for (double t : detail::log_space(window.temperature_min, window.temperature_max, samples)) {
        curve.points.push_back({n, t});
      }
      break;
    }
    case QuantumEffect::SingleFluidAcoustic: {
      const double t = detail::locus_temperature(effect, 0.0, *b0, k);
      if (t < window.temperature_min || t > window.temperature_max) throw unsatisfiable();
      for (double n : detail::log_space(window.density_min, window.density_max, samples)) {
        curve.points.push_back({n, t});
      }
      break;
    }
    default: {
      // T grows monotonically with n on these loci.
      const double lo = std::max(window.density_min, detail::locus_density(effect, window.temperature_min, k));
      const double hi = std::min(window.density_max, detail::locus_density(effect, window.temperature_max, k));
      if (!(hi > lo)) throw unsatisfiable();
      for (double n : detail::log_space(lo, hi, samples)) {
        curve.points.push_back({n, detail::locus_temperature(effect, n, 0.0, k)});
      }
      break;
    }
  }
  return curve;
}

enum class RegimeSide { Classical, Boundary, Quantum };

inline std::string_view to_string(RegimeSide s) {
  switch (s) {
    case RegimeSide::Classical: return "classical";
    case RegimeSide::Boundary: return "boundary";
    case RegimeSide::Quantum: return "quantum";
  }
  return "unknown";
}

inline constexpr double default_boundary_band = 1e-9;

/// Every parameter grows toward its quantum side: lower temperature for the
/// thermal parameters, higher density for the two-fluid one.
inline RegimeSide side_of(double parameter, double band = default_boundary_band) {
  if (std::abs(parameter - 1.0) <= band) return RegimeSide::Boundary;
  return parameter > 1.0 ? RegimeSide::Quantum : RegimeSide::Classical;
}

struct RegimeReport {
  double density;      // m^-3
  double temperature;  // K
  double field;        // T
  QuantumParameters parameters;
  std::array<RegimeSide, 5> sides;  // indexed like all_effects
  std::vector<RegimeWarning> warnings;

  RegimeSide side(QuantumEffect e) const { return sides[static_cast<std::size_t>(e)]; }
};

inline RegimeReport classify(const PlasmaComposition& comp, const PhysicalConstants& k = codata2018,
                             double band = default_boundary_band) {
  const DerivedQuantities dq = derive(comp, k);
  RegimeReport r{};
  r.density = comp.electron_density;
  r.temperature = comp.electron_temperature;
  r.field = comp.magnetic_field;
  r.parameters = quantum_parameters(dq, comp, k);
  for (std::size_t i = 0; i < all_effects.size(); ++i) {
    r.sides[i] = side_of(parameter_value(all_effects[i], r.parameters), band);
  }
  r.warnings = weak_field_warnings(comp, dq, k);
  const double ca2 = dq.alfven_speed * dq.alfven_speed;
  const double cs2 = dq.sound_speed * dq.sound_speed;
  if (std::abs(ca2 - cs2) <= default_resonance_tolerance * cs2) {
    r.warnings.push_back({"sound-alfven-resonance", "c_A ~ c_s: the envelope coefficient Q_c diverges"});
  }
  return r;
}

}  // namespace spinalfven
