#include <gtest/gtest.h>

#include <cmath>

#include "spinalfven/dispersion.hpp"
#include "test_support.hpp"

namespace sa = spinalfven;
using sa::Polarization;
using sa::testing::rel_diff;

namespace {

const sa::PhysicalConstants& K = sa::codata2018;

sa::PlasmaComposition reference() { return sa::hydrogen_plasma(1e26, 1e5, 1e5, 1e-3); }

double omega_of(double k, Polarization p, const sa::DerivedQuantities& dq) {
  const double s = p == Polarization::RightHand ? 1.0 : -1.0;
  return k * dq.alfven_speed * std::sqrt(1.0 + s * k * dq.alfven_speed / dq.omega_ci);
}

double wavenumber_for(double hall, const sa::DerivedQuantities& dq) {
  return hall * dq.omega_ci / dq.alfven_speed;
}

}  // namespace

TEST(Dispersion, LongWavelengthLimit) {
  const auto dq = sa::derive(reference());
  const double k = wavenumber_for(1e-9, dq);
  for (auto p : {Polarization::RightHand, Polarization::LeftHand}) {
    const auto w = sa::dispersion(k, p, dq);
    const double s = p == Polarization::RightHand ? 1.0 : -1.0;
    EXPECT_LT(rel_diff(w.omega / k, dq.alfven_speed), 1e-8);
    EXPECT_LT(rel_diff(w.group_velocity, dq.alfven_speed), 1e-8);
    EXPECT_LT(rel_diff(w.group_dispersion, s * dq.alfven_speed * dq.alfven_speed / dq.omega_ci), 1e-8);
  }
}

TEST(Dispersion, RightHandAtCyclotronScale) {
  const auto dq = sa::derive(reference());
  const double k = dq.omega_ci / dq.alfven_speed;
  const auto w = sa::dispersion(k, Polarization::RightHand, dq);
  EXPECT_LT(rel_diff(w.omega, std::sqrt(2.0) * k * dq.alfven_speed), 1e-14);
}

TEST(Dispersion, LeftHandBeyondResonanceIsRejected) {
  const auto dq = sa::derive(reference());
  EXPECT_THROW(sa::dispersion(wavenumber_for(1.0, dq), Polarization::LeftHand, dq), sa::DomainError);
  EXPECT_THROW(sa::dispersion(wavenumber_for(1.5, dq), Polarization::LeftHand, dq), sa::DomainError);
  EXPECT_NO_THROW(sa::dispersion(wavenumber_for(1.5, dq), Polarization::RightHand, dq));
  EXPECT_THROW(sa::dispersion(0.0, Polarization::RightHand, dq), sa::ValidationError);
  EXPECT_THROW(sa::dispersion(-1.0, Polarization::RightHand, dq), sa::ValidationError);
}

TEST(Dispersion, RelationAndFiniteDifferencesProperty) {
  sa::testing::Sampler s(31);
  for (int i = 0; i < 1000; ++i) {
    const auto dq = sa::derive(s.composition());
    const auto p = i % 2 == 0 ? Polarization::RightHand : Polarization::LeftHand;
    const double hall = s.log_uniform(1e-3, 0.9);
    const double k = wavenumber_for(hall, dq);
    const auto w = sa::dispersion(k, p, dq);
    const double sgn = p == Polarization::RightHand ? 1.0 : -1.0;
    const double rhs = k * k * dq.alfven_speed * dq.alfven_speed * (1.0 + sgn * k * dq.alfven_speed / dq.omega_ci);
    EXPECT_LT(rel_diff(w.omega * w.omega, rhs), 1e-12);
    EXPECT_GT(w.omega, 0.0);

    const double h1 = 1e-6 * k;
    const double fd_vg = (omega_of(k + h1, p, dq) - omega_of(k - h1, p, dq)) / (2.0 * h1);
    EXPECT_LT(rel_diff(w.group_velocity, fd_vg), 1e-6);

    // Five-point second derivative; the step is shrunk near the left-hand resonance.
    const double h2 = 1e-3 * k * (1.0 + sgn * hall);
    const double fd_vgp = (-omega_of(k + 2 * h2, p, dq) + 16 * omega_of(k + h2, p, dq) - 30 * omega_of(k, p, dq) +
                           16 * omega_of(k - h2, p, dq) - omega_of(k - 2 * h2, p, dq)) /
                          (12.0 * h2 * h2);
    EXPECT_LT(rel_diff(w.group_dispersion, fd_vgp), 1e-6);
  }
}

TEST(Dispersion, GroupDispersionSignBySmallKPolarization) {
  sa::testing::Sampler s(32);
  for (int i = 0; i < 200; ++i) {
    const auto dq = sa::derive(s.composition());
    const double k = wavenumber_for(s.uniform(1e-6, 0.1), dq);
    EXPECT_GT(sa::dispersion(k, Polarization::RightHand, dq).group_dispersion, 0.0);
    EXPECT_LT(sa::dispersion(k, Polarization::LeftHand, dq).group_dispersion, 0.0);
  }
}

TEST(Dispersion, RightHandFrequencyMonotone) {
  const auto dq = sa::derive(reference());
  double previous = 0.0;
  for (double hall = 1e-4; hall < 1e3; hall *= 1.05) {
    const double omega = sa::dispersion(wavenumber_for(hall, dq), Polarization::RightHand, dq).omega;
    EXPECT_GT(omega, previous);
    previous = omega;
  }
}

TEST(NlsCoefficients, NoSpinMeansClassical) {
  auto k = K;
  k.bohr_magneton = 0.0;
  const auto comp = reference();
  const auto dq = sa::derive(comp, k);
  const auto carrier = sa::dispersion(wavenumber_for(0.1, dq), Polarization::LeftHand, dq);
  const auto c = sa::nls_coefficients(carrier, dq, comp, k);
  EXPECT_EQ(c.spin_correction_factor, 1.0);
  EXPECT_EQ(c.nonlinear_coeff, c.classical_q);
  EXPECT_EQ(c.dispersion_coeff, carrier.group_dispersion / 2.0);
}

TEST(NlsCoefficients, CorrectionVanishesAtOneHalf) {
  EXPECT_EQ(sa::spin_correction_factor(0.5), 0.0);
  EXPECT_EQ(sa::spin_correction_factor(0.0), 1.0);
  // A composition on the Q = 0 locus: zero up to rounding of the parameter.
  const double b0 = 1e-3;
  const double n0 = b0 / (2.0 * K.bohr_magneton * K.vacuum_permeability);
  const auto comp = sa::hydrogen_plasma(n0, 1e5, 1e5, b0);
  const auto dq = sa::derive(comp);
  const auto c = sa::nls_coefficients(sa::dispersion(wavenumber_for(0.1, dq), Polarization::LeftHand, dq), dq, comp);
  EXPECT_LT(std::abs(c.nonlinear_coeff), 1e-14 * std::abs(c.classical_q));
}

TEST(NlsCoefficients, WeakFieldApproximation) {
  const auto comp = reference();
  const auto dq = sa::derive(comp);
  const auto c = sa::nls_coefficients(sa::dispersion(10.0, Polarization::RightHand, dq), dq, comp);
  const double ratio = dq.alfven_speed / dq.sound_speed;
  ASSERT_LT(ratio, 1e-3);
  EXPECT_LT(c.classical_q, 0.0);
  EXPECT_LT(rel_diff(c.classical_q_weak_field,
                     -10.0 * std::pow(dq.alfven_speed, 3) / (4.0 * dq.sound_speed * dq.sound_speed)),
            1e-14);
  EXPECT_LT(std::abs(c.classical_q - c.classical_q_weak_field) / std::abs(c.classical_q), ratio * ratio);
}

TEST(NlsCoefficients, SoundAlfvenResonanceRejected) {
  const double n0 = 1e20;
  const double te = 1e5;
  auto comp = sa::hydrogen_plasma(n0, te, te, 1.0);
  const double cs = std::sqrt(K.boltzmann * 2.0 * te / K.proton_mass);
  comp.magnetic_field = cs * std::sqrt(K.vacuum_permeability * n0 * K.proton_mass);
  const auto dq = sa::derive(comp);
  const auto carrier = sa::dispersion(wavenumber_for(0.1, dq), Polarization::RightHand, dq);
  EXPECT_THROW(sa::nls_coefficients(carrier, dq, comp), sa::DomainError);
  comp.magnetic_field *= 1.01;
  const auto dq2 = sa::derive(comp);
  EXPECT_NO_THROW(sa::nls_coefficients(sa::dispersion(wavenumber_for(0.1, dq2), Polarization::RightHand, dq2), dq2, comp));
}

TEST(NlsCoefficients, InvariantsProperty) {
  sa::testing::Sampler s(33);
  for (int i = 0; i < 1000; ++i) {
    const auto comp = s.composition();
    const auto dq = sa::derive(comp);
    const double ca2 = dq.alfven_speed * dq.alfven_speed;
    const double cs2 = dq.sound_speed * dq.sound_speed;
    if (std::abs(ca2 - cs2) <= 1e-6 * cs2) continue;
    const auto c = sa::nls_coefficients(sa::dispersion(wavenumber_for(0.05, dq), Polarization::LeftHand, dq), dq, comp);
    const double two_fluid = sa::quantum_parameters(dq, comp).two_fluid_nonlinear;
    EXPECT_EQ(c.nonlinear_coeff, c.classical_q * c.spin_correction_factor);
    EXPECT_LE(c.spin_correction_factor, 1.0);
    EXPECT_EQ(c.spin_correction_factor < 0.0, two_fluid > 0.5);
  }
}

TEST(NlsCoefficients, SignFlipLocatedByBisection) {
  const double b0 = 1e-3;
  const double te = 1e5;
  auto q_at = [&](double n0) {
    const auto comp = sa::hydrogen_plasma(n0, te, te, b0);
    const auto dq = sa::derive(comp);
    return sa::nls_coefficients(sa::dispersion(wavenumber_for(0.1, dq), Polarization::LeftHand, dq), dq, comp)
        .nonlinear_coeff;
  };
  double lo = 1e24;
  double hi = 1e27;
  ASSERT_LT(q_at(lo), 0.0);
  ASSERT_GT(q_at(hi), 0.0);
  while (hi - lo > 1e-15 * hi) {
    const double mid = 0.5 * (lo + hi);
    (q_at(mid) < 0.0 ? lo : hi) = mid;
  }
  const double expected = b0 / (2.0 * K.bohr_magneton * K.vacuum_permeability);
  EXPECT_LT(rel_diff(0.5 * (lo + hi), expected), 1e-9);
}

TEST(SpinAlfvenSpeed, HotLimitIsUnity) {
  auto comp = reference();
  comp.electron_temperature = 1e12;
  const auto dq = sa::derive(comp);
  EXPECT_LT(sa::spin_alfven_speed_factor(comp, dq) - 1.0, 1e-18);
  EXPECT_GE(sa::spin_alfven_speed_factor(comp, dq), 1.0);
}

TEST(SpinAlfvenSpeed, ColdSaturation) {
  const auto comp = sa::hydrogen_plasma(1e22, 1e-4, 1e-4, 1.0);
  const auto dq = sa::derive(comp);
  const auto sp = sa::equilibrium_populations(comp);
  ASSERT_EQ(sp.brillouin_factor, 1.0);
  const double wce0 = K.elementary_charge * (comp.magnetic_field - K.vacuum_permeability * K.bohr_magneton * 1e22) /
                      K.electron_mass;
  const double expected = K.planck_hbar * dq.omega_pe * dq.omega_pe /
                          (2.0 * K.proton_mass * K.speed_of_light * K.speed_of_light * wce0);
  EXPECT_LT(rel_diff(sa::spin_alfven_speed_correction(comp, dq), expected), 1e-12);
}

TEST(SpinAlfvenSpeed, ReferenceIncrement) {
  const auto comp = reference();
  const auto dq = sa::derive(comp);
  EXPECT_LT(rel_diff(sa::spin_alfven_speed_correction(comp, dq), 4.26336899427535170e-12), 1e-12);
}
