#include <gtest/gtest.h>

#include <cmath>

#include "spinalfven/plasma.hpp"
#include "test_support.hpp"

namespace sa = spinalfven;
using sa::testing::rel_diff;

namespace {

const sa::PhysicalConstants& K = sa::codata2018;

sa::PlasmaComposition reference() { return sa::hydrogen_plasma(1e26, 1e5, 1e5, 1e-3); }

}  // namespace

TEST(Constants, BohrMagnetonMatchesDefinition) {
  const double mu_b = K.elementary_charge * K.planck_hbar / (2.0 * K.electron_mass);
  EXPECT_LT(rel_diff(K.bohr_magneton, mu_b), 1e-6);
}

TEST(Constants, LightSpeedConsistentWithVacuumConstants) {
  const double c = K.speed_of_light;
  EXPECT_LT(std::abs(c * c * K.vacuum_permeability * K.vacuum_permittivity - 1.0), 1e-9);
}

TEST(Derive, ReferencePlasma) {
  // mpmath evaluation, tests/oracle/reference_values.py
  const auto dq = sa::derive(reference());
  EXPECT_LT(rel_diff(dq.omega_pe, 5.64146023118062757e14), 1e-12);
  EXPECT_LT(rel_diff(dq.alfven_speed, 2.18120344728504400), 1e-12);
  EXPECT_LT(rel_diff(dq.sound_speed, 40631.0220317560230), 1e-12);
  EXPECT_LT(rel_diff(dq.omega_ci, 95788.3315594363707), 1e-12);
  EXPECT_LT(rel_diff(dq.fermi_temperature, 911.655411801610409), 1e-12);
  EXPECT_NEAR(dq.omega_pe, 5.64e14, 0.01e14);
  EXPECT_NEAR(dq.alfven_speed, 2.18, 0.01);
}

TEST(Derive, AlfvenSpeedDefinition) {
  const auto comp = reference();
  const auto dq = sa::derive(comp);
  EXPECT_EQ(dq.alfven_speed, comp.magnetic_field / std::sqrt(K.vacuum_permeability * dq.mass_density));
  EXPECT_EQ(dq.mass_density, comp.electron_density * comp.ion_mass);
}

TEST(Derive, RejectsInvalidFieldsByName) {
  auto expect_field = [](sa::PlasmaComposition c, const std::string& field) {
    try {
      sa::derive(c);
      FAIL() << "expected rejection of " << field;
    } catch (const sa::ValidationError& e) {
      EXPECT_EQ(e.field(), field);
      EXPECT_NE(std::string(e.what()).find(field), std::string::npos);
    }
  };
  auto c = reference();
  c.electron_density = -1.0;
  expect_field(c, "electron_density");
  c = reference();
  c.electron_temperature = 0.0;
  expect_field(c, "electron_temperature");
  c = reference();
  c.magnetic_field = 0.0;
  expect_field(c, "magnetic_field");
  c = reference();
  c.ion_mass = -2.0;
  expect_field(c, "ion_mass");
  c = reference();
  c.ion_temperature = -1.0;
  expect_field(c, "ion_temperature");
  c = reference();
  c.ion_charge_number = 0.5;
  expect_field(c, "ion_charge_number");
  c = reference();
  c.ion_temperature = 0.0;
  EXPECT_NO_THROW(sa::derive(c));
}

TEST(Derive, ScalingLawsProperty) {
  sa::testing::Sampler s(11);
  for (int i = 0; i < 500; ++i) {
    const auto comp = s.composition();
    const double lambda = s.log_uniform(1e-3, 1e3);
    const auto base = sa::derive(comp);

    auto scaled_b = comp;
    scaled_b.magnetic_field *= lambda;
    const auto b = sa::derive(scaled_b);
    EXPECT_LT(rel_diff(b.omega_ce, lambda * base.omega_ce), 1e-13);
    EXPECT_LT(rel_diff(b.omega_ci, lambda * base.omega_ci), 1e-13);
    EXPECT_LT(rel_diff(b.alfven_speed, lambda * base.alfven_speed), 1e-13);

    auto scaled_n = comp;
    scaled_n.electron_density *= lambda;
    const auto n = sa::derive(scaled_n);
    EXPECT_LT(rel_diff(n.omega_pe, std::sqrt(lambda) * base.omega_pe), 1e-13);
    EXPECT_LT(rel_diff(n.alfven_speed, base.alfven_speed / std::sqrt(lambda)), 1e-13);
  }
}

TEST(Derive, AllPositiveForValidCompositions) {
  sa::testing::Sampler s(12);
  for (int i = 0; i < 200; ++i) {
    const auto dq = sa::derive(s.composition());
    EXPECT_GT(dq.omega_pe, 0.0);
    EXPECT_GT(dq.omega_ce, 0.0);
    EXPECT_GT(dq.omega_ci, 0.0);
    EXPECT_GT(dq.alfven_speed, 0.0);
    EXPECT_GT(dq.sound_speed, 0.0);
    EXPECT_GT(dq.mass_density, 0.0);
    EXPECT_GT(dq.fermi_temperature, 0.0);
  }
}

TEST(QuantumParameters, ReferencePlasma) {
  const auto qp = sa::quantum_parameters(reference());
  EXPECT_LT(rel_diff(qp.two_fluid_nonlinear, 1.16540647788661832), 1e-12);
  EXPECT_NEAR(qp.two_fluid_nonlinear, 1.17, 0.005);
  EXPECT_LT(rel_diff(qp.single_fluid_acoustic, 6.71713815625839732e-9), 1e-12);
  EXPECT_LT(rel_diff(qp.bohm_debroglie, 0.0430907853229125902), 1e-12);
  EXPECT_LT(rel_diff(qp.single_fluid_alfven, 3.13127852427009005e-8), 1e-12);
  EXPECT_LT(rel_diff(qp.fermi_ratio, 0.00911655411801610409), 1e-12);
}

TEST(QuantumParameters, VanishingFieldLimit) {
  auto comp = reference();
  double previous = sa::quantum_parameters(comp).single_fluid_acoustic;
  for (double b0 : {1e-6, 1e-9, 1e-12, 1e-15}) {
    comp.magnetic_field = b0;
    const double now = sa::quantum_parameters(comp).single_fluid_acoustic;
    EXPECT_LT(now, previous);
    EXPECT_LT(rel_diff(now, K.bohr_magneton * b0 / (K.boltzmann * comp.electron_temperature)), 1e-15);
    previous = now;
  }
  EXPECT_LT(previous, 1e-20);
}

TEST(QuantumParameters, FermiLocusSelfConsistent) {
  sa::testing::Sampler s(13);
  for (int i = 0; i < 200; ++i) {
    auto comp = s.composition();
    comp.electron_temperature = sa::fermi_temperature(comp.electron_density);
    EXPECT_NEAR(sa::quantum_parameters(comp).fermi_ratio, 1.0, 1e-12);
  }
}

TEST(QuantumParameters, TwoFluidIdentityAndIndependence) {
  sa::testing::Sampler s(14);
  const double ref_ratio = K.bohr_magneton * K.vacuum_permeability;
  for (int i = 0; i < 1000; ++i) {
    const auto comp = s.composition();
    const auto qp = sa::quantum_parameters(comp);
    const double identity = K.bohr_magneton * K.vacuum_permeability * comp.electron_density /
                            comp.magnetic_field;
    EXPECT_LT(rel_diff(qp.two_fluid_nonlinear, identity), 1e-12);
    // proportional to n / B0
    EXPECT_LT(rel_diff(qp.two_fluid_nonlinear * comp.magnetic_field / comp.electron_density, ref_ratio),
              1e-12);

    auto hotter = comp;
    hotter.electron_temperature *= s.log_uniform(1e-3, 1e3);
    EXPECT_LT(rel_diff(sa::quantum_parameters(hotter).two_fluid_nonlinear, qp.two_fluid_nonlinear), 1e-15);

    auto denser = comp;
    denser.electron_density *= s.log_uniform(1e-3, 1e3);
    EXPECT_EQ(sa::quantum_parameters(denser).single_fluid_acoustic, qp.single_fluid_acoustic);
  }
}

TEST(QuantumParameters, BohmProportionality) {
  sa::testing::Sampler s(15);
  const auto ref = reference();
  const double ref_ratio = sa::quantum_parameters(ref).bohm_debroglie * ref.electron_temperature /
                           std::sqrt(ref.electron_density);
  for (int i = 0; i < 500; ++i) {
    const auto comp = s.composition();
    const double ratio = sa::quantum_parameters(comp).bohm_debroglie * comp.electron_temperature /
                         std::sqrt(comp.electron_density);
    EXPECT_LT(rel_diff(ratio, ref_ratio), 1e-13);
  }
}

TEST(QuantumParameters, NonNegative) {
  sa::testing::Sampler s(16);
  for (int i = 0; i < 200; ++i) {
    const auto qp = sa::quantum_parameters(s.composition());
    EXPECT_GE(qp.fermi_ratio, 0.0);
    EXPECT_GE(qp.bohm_debroglie, 0.0);
    EXPECT_GE(qp.single_fluid_alfven, 0.0);
    EXPECT_GE(qp.single_fluid_acoustic, 0.0);
    EXPECT_GE(qp.two_fluid_nonlinear, 0.0);
  }
}
