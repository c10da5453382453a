#pragma once

namespace spinalfven {

/// SI physical constants. A plain aggregate so tests can switch individual
/// couplings off (e.g. `bohr_magneton = 0` removes every spin term).
struct PhysicalConstants {
  double electron_mass;        // kg
  double elementary_charge;    // C
  double planck_hbar;          // J s
  double boltzmann;            // J/K
  double vacuum_permeability;  // H/m
  double vacuum_permittivity;  // F/m
  double speed_of_light;       // m/s
  double bohr_magneton;        // J/T
  double proton_mass;          // kg
  double atomic_mass_unit;     // kg
};

// CODATA 2018 recommended values.
inline constexpr PhysicalConstants codata2018{
    .electron_mass = 9.1093837015e-31,
    .elementary_charge = 1.602176634e-19,
    .planck_hbar = 1.054571817e-34,
    .boltzmann = 1.380649e-23,
    .vacuum_permeability = 1.25663706212e-6,
    .vacuum_permittivity = 8.8541878128e-12,
    .speed_of_light = 299792458.0,
    .bohr_magneton = 9.2740100783e-24,
    .proton_mass = 1.67262192369e-27,
    .atomic_mass_unit = 1.66053906660e-27,
};

}  // namespace spinalfven
