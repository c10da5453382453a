#pragma once

// Two-fluid electron spin model: equilibrium spin-up / spin-down populations
// and the low-frequency ponderomotive responses driven by an Alfven envelope
// of squared amplitude |B|^2.
//
// Sign convention: the "+" population has its spin antiparallel to B0, hence
// its magnetic moment parallel to B0 (mu_+ = -mu_- = mu_B). It is the lower
// energy state and therefore the majority population in equilibrium.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "spinalfven/constants.hpp"
#include "spinalfven/errors.hpp"
#include "spinalfven/plasma.hpp"

namespace spinalfven {

struct SpinPopulations {
  double n_plus0;                // m^-3
  double n_minus0;               // m^-3
  double population_difference;  // n_plus0 - n_minus0, m^-3
  double magnetization;          // M0, A/m
  double brillouin_factor;       // tanh(mu_B B0 / k_B T_e)
};

/// Equilibrium populations from the Brillouin factor. The exact tanh is used
/// rather than its small-argument expansion.
///
/// `population_difference` is evaluated as n0 * tanh(x) directly; the
/// difference of the two stored populations loses ~1e-16 / tanh(x) relative
/// precision when x is tiny.
inline SpinPopulations equilibrium_populations(const PlasmaComposition& comp,
                                               const PhysicalConstants& k = codata2018) {
  validate(comp);
  const double n0 = comp.electron_density;
  const double x = k.bohr_magneton * comp.magnetic_field / (k.boltzmann * comp.electron_temperature);
  const double t = std::tanh(x);
  SpinPopulations sp{};
  sp.brillouin_factor = t;
  sp.n_plus0 = 0.5 * n0 * (1.0 + t);
  // n_plus0 lies in [n0/2, n0], so this subtraction is exact and the sum
  // reproduces n0 bit for bit.
  sp.n_minus0 = n0 - sp.n_plus0;
  sp.population_difference = n0 * t;
  sp.magnetization = k.bohr_magneton * sp.population_difference;
  return sp;
}

template <class T>
struct WithWarnings {
  T value;
  std::vector<RegimeWarning> warnings;
};

/// Field above which the low-frequency ion inertia can no longer be dropped.
inline double weak_field_limit(const PlasmaComposition& comp, const DerivedQuantities& dq,
                               const PhysicalConstants& k = codata2018) {
  return std::sqrt(k.vacuum_permeability * dq.mass_density * k.boltzmann *
                   (comp.ion_temperature + comp.electron_temperature) / comp.ion_mass);
}

inline std::vector<RegimeWarning> weak_field_warnings(const PlasmaComposition& comp,
                                                      const DerivedQuantities& dq,
                                                      const PhysicalConstants& k = codata2018) {
  std::vector<RegimeWarning> out;
  const double limit = weak_field_limit(comp, dq, k);
  if (comp.magnetic_field >= limit) {
    out.push_back({"weak-field",
                   "B0 >= sqrt(mu0 rho0 k_B (T_i + T_e) / m_i): c_A >= c_s and the "
                   "inertia-free density depletion is not justified"});
  }
  const double x = k.bohr_magneton * comp.magnetic_field / (k.boltzmann * comp.electron_temperature);
  if (x >= 0.1) {
    out.push_back({"spin-expansion",
                   "mu_B B0 / k_B T_e >= 0.1: first-order expansion in the spin parameter is "
                   "inaccurate"});
  }
  return out;
}

/// Ion (and total electron) density depletion n_lf = -|B|^2 / ((k_B T_i + k_B T_e) mu0).
inline WithWarnings<double> density_depletion(const PlasmaComposition& comp,
                                              const DerivedQuantities& dq, double b_amp_sq,
                                              const PhysicalConstants& k = codata2018) {
  validate(comp);
  if (!(b_amp_sq >= 0.0) || !std::isfinite(b_amp_sq)) {
    throw ValidationError("b_amp_sq", "must be finite and >= 0");
  }
  const double pressure_per_density =
      k.boltzmann * comp.ion_temperature + k.boltzmann * comp.electron_temperature;
  double n_lf = -b_amp_sq / (pressure_per_density * k.vacuum_permeability);
  if (n_lf == 0.0) n_lf = 0.0;  // no negative zero
  return {n_lf, weak_field_warnings(comp, dq, k)};
}

/// Prefactor of d/dz(|B|^2) in the summed spin ponderomotive force,
/// (n0/2)(mu_B B0/k_B T_e)(e hbar/m_e)/B0, in N m^-3 T^-2 m.
inline double ponderomotive_sum_coefficient(const PlasmaComposition& comp,
                                            const PhysicalConstants& k = codata2018) {
  const double b0 = comp.magnetic_field;
  const double spin = k.bohr_magneton * b0 / (k.boltzmann * comp.electron_temperature);
  return 0.5 * comp.electron_density * spin * (k.elementary_charge * k.planck_hbar / k.electron_mass) /
         b0;
}

/// Summed spin ponderomotive force density F_p+ + F_p- (N/m^3) for a sampled
/// |B|^2(z) profile with uniform spacing `dz`. Centered differences inside,
/// first-order one-sided differences at the two end points.
inline std::vector<double> ponderomotive_sum(const PlasmaComposition& comp,
                                             std::span<const double> b_amp_sq, double dz,
                                             const PhysicalConstants& k = codata2018) {
  validate(comp);
  if (b_amp_sq.size() < 3) throw ValidationError("b_amp_sq", "profile needs at least 3 points");
  if (!(dz > 0.0) || !std::isfinite(dz)) throw ValidationError("dz", "must be finite and > 0");
  const double c = ponderomotive_sum_coefficient(comp, k);
  const std::size_t n = b_amp_sq.size();
  std::vector<double> force(n);
  force[0] = c * (b_amp_sq[1] - b_amp_sq[0]) / dz;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    force[i] = c * (b_amp_sq[i + 1] - b_amp_sq[i - 1]) / (2.0 * dz);
  }
  force[n - 1] = c * (b_amp_sq[n - 1] - b_amp_sq[n - 2]) / dz;
  return force;
}

struct ElectronSumResponse {
  double electron_sum;  // n_+^lf + n_-^lf, m^-3
  double potential;     // Phi^lf, V
};

/// Closes the summed electron balance with quasineutrality (electron sum equal
/// to the ion depletion `n_lf`) and solves it for the low-frequency potential.
inline ElectronSumResponse electron_sum_response(const PlasmaComposition& comp,
                                                 const DerivedQuantities& dq, double b_amp_sq,
                                                 double n_lf,
                                                 const PhysicalConstants& k = codata2018) {
  validate(comp);
  if (!(b_amp_sq >= 0.0) || !std::isfinite(b_amp_sq)) {
    throw ValidationError("b_amp_sq", "must be finite and >= 0");
  }
  if (!std::isfinite(n_lf)) throw ValidationError("n_lf", "must be finite");
  const QuantumParameters qp = quantum_parameters(dq, comp, k);
  const double thermal = k.boltzmann * comp.electron_temperature;
  const double correction = 1.0 - qp.single_fluid_acoustic * qp.two_fluid_nonlinear;
  const double magnetic = b_amp_sq / (k.vacuum_permeability * thermal);
  const double phi =
      thermal / (k.elementary_charge * comp.electron_density) * (n_lf + correction * magnetic);
  return {n_lf, phi};
}

/// n_+^lf - n_-^lf = (2/k_B T_e)(mu_B B0/(m_i c_A^2))(|B|^2/mu0); never negative.
inline double electron_difference_response(const PlasmaComposition& comp,
                                           const DerivedQuantities& dq, double b_amp_sq,
                                           const PhysicalConstants& k = codata2018) {
  validate(comp);
  if (!(b_amp_sq >= 0.0) || !std::isfinite(b_amp_sq)) {
    throw ValidationError("b_amp_sq", "must be finite and >= 0");
  }
  const double two_fluid = k.bohr_magneton * comp.magnetic_field /
                           (comp.ion_mass * dq.alfven_speed * dq.alfven_speed);
  return 2.0 / (k.boltzmann * comp.electron_temperature) * two_fluid *
         (b_amp_sq / k.vacuum_permeability);
}

struct SpinDensityPerturbations {
  double n_plus_lf;
  double n_minus_lf;
};

inline SpinDensityPerturbations split_populations(double electron_sum, double electron_difference) {
  return {0.5 * (electron_sum + electron_difference), 0.5 * (electron_sum - electron_difference)};
}

struct LowFrequencyResponse {
  double total_density;        // n_lf, m^-3
  double electron_sum;         // m^-3
  double electron_difference;  // m^-3
  double potential;            // V
  double pond_force_sum;       // N/m^3
  std::vector<RegimeWarning> warnings;
};

/// All low-frequency responses at one point, given the local |B|^2 and its
/// gradient d|B|^2/dz (T^2/m).
inline LowFrequencyResponse low_frequency_response(const PlasmaComposition& comp,
                                                   const DerivedQuantities& dq, double b_amp_sq,
                                                   double b_amp_sq_gradient,
                                                   const PhysicalConstants& k = codata2018) {
  auto depletion = density_depletion(comp, dq, b_amp_sq, k);
  const auto sum = electron_sum_response(comp, dq, b_amp_sq, depletion.value, k);
  LowFrequencyResponse r{};
  r.total_density = depletion.value;
  r.electron_sum = sum.electron_sum;
  r.electron_difference = electron_difference_response(comp, dq, b_amp_sq, k);
  r.potential = sum.potential;
  r.pond_force_sum = ponderomotive_sum_coefficient(comp, k) * b_amp_sq_gradient;
  r.warnings = std::move(depletion.warnings);
  return r;
}

}  // namespace spinalfven
