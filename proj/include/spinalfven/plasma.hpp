#pragma once

// Primitive plasma description and the frequencies, speeds and dimensionless
// quantum parameters derived from it.

#include <cmath>
#include <numbers>
#include <string>

#include "spinalfven/constants.hpp"
#include "spinalfven/errors.hpp"

namespace spinalfven {

struct PlasmaComposition {
  double electron_density;      // n0, m^-3
  double electron_temperature;  // T_e, K
  double ion_temperature;       // T_i, K
  double magnetic_field;        // B0, T
  double ion_mass;              // m_i, kg
  double ion_charge_number = 1.0;
};

/// Proton-electron plasma.
inline PlasmaComposition hydrogen_plasma(double n0, double te, double ti, double b0,
                                         const PhysicalConstants& k = codata2018) {
  return {n0, te, ti, b0, k.proton_mass, 1.0};
}

inline void validate(const PlasmaComposition& comp) {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw ValidationError(field, what);
  };
  require(std::isfinite(comp.electron_density) && comp.electron_density > 0.0, "electron_density",
          "must be finite and > 0");
  require(std::isfinite(comp.electron_temperature) && comp.electron_temperature > 0.0,
          "electron_temperature", "must be finite and > 0");
  require(std::isfinite(comp.ion_temperature) && comp.ion_temperature >= 0.0, "ion_temperature",
          "must be finite and >= 0");
  require(std::isfinite(comp.magnetic_field) && comp.magnetic_field > 0.0, "magnetic_field",
          "must be finite and > 0");
  require(std::isfinite(comp.ion_mass) && comp.ion_mass > 0.0, "ion_mass",
          "must be finite and > 0");
  require(std::isfinite(comp.ion_charge_number) && comp.ion_charge_number >= 1.0,
          "ion_charge_number", "must be >= 1");
}

struct DerivedQuantities {
  double omega_pe;           // rad/s
  double omega_ce;           // rad/s
  double omega_ci;           // rad/s
  double alfven_speed;       // m/s
  double sound_speed;        // m/s
  double mass_density;       // kg/m^3
  double fermi_temperature;  // K
};

/// Fermi temperature (hbar^2 / 2 m_e k_B) (3 pi^2 n0)^(2/3).
inline double fermi_temperature(double n0, const PhysicalConstants& k = codata2018) {
  const double hbar = k.planck_hbar;
  return hbar * hbar / (2.0 * k.electron_mass * k.boltzmann) *
         std::cbrt(std::pow(3.0 * std::numbers::pi * std::numbers::pi * n0, 2.0));
}

inline double electron_plasma_frequency(double n0, const PhysicalConstants& k = codata2018) {
  return std::sqrt(n0 * k.elementary_charge * k.elementary_charge /
                   (k.vacuum_permittivity * k.electron_mass));
}

/// Quasineutral ion mass density with the electron mass neglected.
inline DerivedQuantities derive(const PlasmaComposition& comp,
                                const PhysicalConstants& k = codata2018) {
  validate(comp);
  const double n0 = comp.electron_density;
  const double b0 = comp.magnetic_field;
  DerivedQuantities dq{};
  dq.omega_pe = electron_plasma_frequency(n0, k);
  dq.omega_ce = k.elementary_charge * b0 / k.electron_mass;
  dq.omega_ci = comp.ion_charge_number * k.elementary_charge * b0 / comp.ion_mass;
  dq.mass_density = n0 * comp.ion_mass / comp.ion_charge_number;
  dq.alfven_speed = b0 / std::sqrt(k.vacuum_permeability * dq.mass_density);
  dq.sound_speed =
      std::sqrt(k.boltzmann * (comp.electron_temperature + comp.ion_temperature) / comp.ion_mass);
  dq.fermi_temperature = fermi_temperature(n0, k);
  return dq;
}

struct QuantumParameters {
  double fermi_ratio;            // T_F / T_e
  double bohm_debroglie;         // hbar w_pe / k_B T_e
  double single_fluid_alfven;    // hbar^2 w_pe^2 / (m_e c^2 k_B T_e)
  double single_fluid_acoustic;  // mu_B B0 / k_B T_e
  double two_fluid_nonlinear;    // mu_B B0 / (m_i c_A^2)
};

inline QuantumParameters quantum_parameters(const DerivedQuantities& dq,
                                            const PlasmaComposition& comp,
                                            const PhysicalConstants& k = codata2018) {
  validate(comp);
  const double thermal = k.boltzmann * comp.electron_temperature;
  const double hbar = k.planck_hbar;
  const double c = k.speed_of_light;
  QuantumParameters qp{};
  qp.fermi_ratio = dq.fermi_temperature / comp.electron_temperature;
  qp.bohm_debroglie = hbar * dq.omega_pe / thermal;
  qp.single_fluid_alfven =
      hbar * hbar * dq.omega_pe * dq.omega_pe / (k.electron_mass * c * c * thermal);
  qp.single_fluid_acoustic = k.bohr_magneton * comp.magnetic_field / thermal;
  qp.two_fluid_nonlinear = k.bohr_magneton * comp.magnetic_field /
                           (comp.ion_mass * dq.alfven_speed * dq.alfven_speed);
  return qp;
}

inline QuantumParameters quantum_parameters(const PlasmaComposition& comp,
                                            const PhysicalConstants& k = codata2018) {
  return quantum_parameters(derive(comp, k), comp, k);
}

}  // namespace spinalfven
