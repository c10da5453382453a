#pragma once

// Parallel Alfven waves with Hall dispersion,
//   omega^2 = k^2 c_A^2 (1 +- k c_A / omega_ci),
// upper sign right-hand, lower sign left-hand circular polarization, and the
// coefficients of the envelope equation built on top of it.

#include <cmath>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "spinalfven/constants.hpp"
#include "spinalfven/errors.hpp"
#include "spinalfven/plasma.hpp"
#include "spinalfven/spin_fluid.hpp"

namespace spinalfven {

enum class Polarization { RightHand, LeftHand };

inline std::string_view to_string(Polarization p) {
  return p == Polarization::RightHand ? "right" : "left";
}

inline double polarization_sign(Polarization p) {
  return p == Polarization::RightHand ? 1.0 : -1.0;
}

struct CarrierWave {
  double wavenumber;  // k, rad/m
  Polarization polarization;
  double omega;           // rad/s
  double group_velocity;  // v_g, m/s
  double group_dispersion;  // v_g' = d v_g / dk, m^2/s
  double hall_parameter;    // k c_A / omega_ci
};

/// Closed-form omega(k), v_g and v_g'. With s = +-1 and b = c_A/omega_ci:
///   omega   = c_A k sqrt(g),               g = 1 + s b k
///   v_g     = c_A (1 + 3 s b k / 2) / sqrt(g)
///   v_g'    = s c_A b (1 + 3 s b k / 4) / g^(3/2)
inline CarrierWave dispersion(double k, Polarization pol, const DerivedQuantities& dq) {
  if (!(k > 0.0) || !std::isfinite(k)) throw ValidationError("wavenumber", "must be finite and > 0");
  const double ca = dq.alfven_speed;
  const double b = ca / dq.omega_ci;
  const double s = polarization_sign(pol);
  const double bk = b * k;
  if (pol == Polarization::LeftHand && bk >= 1.0) {
    throw DomainError("beyond ion-cyclotron resonance: left-hand wave needs k c_A / omega_ci < 1 (got " +
                      fmt::format("{:.6g}", bk) + ")");
  }
  const double g = 1.0 + s * bk;
  const double root = std::sqrt(g);
  CarrierWave w{};
  w.wavenumber = k;
  w.polarization = pol;
  w.hall_parameter = bk;
  w.omega = ca * k * root;
  w.group_velocity = ca * (1.0 + 1.5 * s * bk) / root;
  w.group_dispersion = s * ca * b * (1.0 + 0.75 * s * bk) / (g * root);
  return w;
}

struct NlsCoefficients {
  double dispersion_coeff;        // v_g'/2, m^2/s
  double nonlinear_coeff;         // Q, rad/s
  double classical_q;             // Q_c, rad/s
  double classical_q_weak_field;  // -k c_A^3 / (4 c_s^2), the c_A << c_s limit of Q_c
  double spin_correction_factor;  // 1 - (2 mu_B B0 / m_i c_A^2)^2

  double group_dispersion() const { return 2.0 * dispersion_coeff; }
};

inline constexpr double default_resonance_tolerance = 1e-6;

/// 1 - (2 mu_B B0 / m_i c_A^2)^2; vanishes at a two-fluid parameter of 1/2.
constexpr double spin_correction_factor(double two_fluid_nonlinear) {
  const double x = 2.0 * two_fluid_nonlinear;
  return 1.0 - x * x;
}

/// Envelope coefficients for a carrier. Q_c = k c_A^3 / (4 (c_A^2 - c_s^2)) is
/// used in exact form; Q = Q_c (1 - (2 mu_B B0 / m_i c_A^2)^2).
inline NlsCoefficients nls_coefficients(const CarrierWave& carrier, const DerivedQuantities& dq,
                                        const PlasmaComposition& comp,
                                        const PhysicalConstants& k = codata2018,
                                        double resonance_tolerance = default_resonance_tolerance) {
  validate(comp);
  const double ca = dq.alfven_speed;
  const double cs = dq.sound_speed;
  const double ca2 = ca * ca;
  const double cs2 = cs * cs;
  if (std::abs(ca2 - cs2) <= resonance_tolerance * cs2) {
    throw DomainError("sound-Alfven resonance: Q_c diverges (|c_A^2 - c_s^2| / c_s^2 <= " +
                      fmt::format("{:.6g}", resonance_tolerance) + ")");
  }
  const double kw = carrier.wavenumber;
  const double two_fluid = k.bohr_magneton * comp.magnetic_field / (comp.ion_mass * ca2);
  NlsCoefficients c{};
  c.dispersion_coeff = 0.5 * carrier.group_dispersion;
  c.classical_q = kw * ca2 * ca / (4.0 * (ca2 - cs2));
  c.classical_q_weak_field = -kw * ca2 * ca / (4.0 * cs2);
  c.spin_correction_factor = spin_correction_factor(two_fluid);
  c.nonlinear_coeff = c.classical_q * c.spin_correction_factor;
  return c;
}

/// Increment of the single-fluid spin factor that lowers the linear Alfven speed,
///   (hbar w_pe^2 / (2 m_i c^2 w_ce0)) tanh(mu_B B0 / k_B T_e),
/// with w_ce0 = e (B0 - mu0 M0) / m_e.
inline double spin_alfven_speed_correction(const PlasmaComposition& comp, const DerivedQuantities& dq,
                                           const PhysicalConstants& k = codata2018) {
  const SpinPopulations sp = equilibrium_populations(comp, k);
  const double external_field = comp.magnetic_field - k.vacuum_permeability * sp.magnetization;
  const double omega_ce0 = k.elementary_charge * external_field / k.electron_mass;
  const double c = k.speed_of_light;
  return k.planck_hbar * dq.omega_pe * dq.omega_pe / (2.0 * comp.ion_mass * c * c * omega_ce0) *
         sp.brillouin_factor;
}

/// Diagnostic only: the envelope coefficients use the uncorrected c_A, which
/// is accurate while mu_B B0 << k_B T_e.
inline double spin_alfven_speed_factor(const PlasmaComposition& comp, const DerivedQuantities& dq,
                                       const PhysicalConstants& k = codata2018) {
  return 1.0 + spin_alfven_speed_correction(comp, dq, k);
}

}  // namespace spinalfven
