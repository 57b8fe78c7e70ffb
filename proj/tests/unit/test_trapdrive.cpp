#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hejc/analytic.hpp"
#include "hejc/trapdrive.hpp"

using namespace hejc;

TEST(Trap, FieldFromChargeRoundTrip) {
  const auto& k = constants();
  const double h = 5e-7;
  const double q = 1e4 * h * h / k.coulomb;
  EXPECT_NEAR(field_from_charge(q, h), 1e4, 1e-8);
  const auto cfg = TrapConfig::from_charge(q, h, 1.2);
  EXPECT_NEAR(cfg.e_perp, 1e4, 1e-8);
  ASSERT_TRUE(cfg.charge.has_value());
}

TEST(Trap, BothParameterizationsMustAgree) {
  const auto& k = constants();
  const double h = 5e-7;
  const double q = 1e4 * h * h / k.coulomb;
  EXPECT_NO_THROW(TrapConfig::from_field_and_charge(1e4 * 1.005, q, h));
  EXPECT_THROW(TrapConfig::from_field_and_charge(1e4 * 1.02, q, h), std::invalid_argument);
}

TEST(Trap, Validation) {
  EXPECT_THROW(TrapConfig::from_field(0.0, 5e-7), std::invalid_argument);
  EXPECT_THROW(TrapConfig::from_field(1e4, -1.0), std::invalid_argument);
  EXPECT_THROW(TrapConfig::from_field(1e4, 5e-7, -1.0), std::invalid_argument);
  EXPECT_THROW(TrapConfig::from_charge(1e-20, 0.0), std::invalid_argument);
}

TEST(Trap, FrequencyRegimes) {
  EXPECT_NEAR(trap_frequency(TrapConfig::from_field(1e4, 5e-7)), 5.9e10, 0.01 * 5.9e10);
  EXPECT_NEAR(trap_frequency(TrapConfig::from_field(1e-5, 1e-2)), 1.33e4, 0.01 * 1.33e4);
}

TEST(Trap, FrequencyScaling) {
  const double a = trap_frequency(TrapConfig::from_field(1e4, 5e-7));
  const double b = trap_frequency(TrapConfig::from_field(4e4, 5e-7));
  const double c = trap_frequency(TrapConfig::from_field(1e4, 2e-6));
  EXPECT_NEAR(b / a, 2.0, 1e-12);
  EXPECT_NEAR(c / a, 0.5, 1e-12);
}

TEST(Trap, VibrationalTemperature) {
  EXPECT_NEAR(vibrational_temperature(5.9e10), 0.45, 0.02 * 0.45);
}

TEST(LambDicke, Formula) {
  const auto& k = constants();
  const double omega_0 = 1.1e12;
  const double nu = 5.9e10;
  const auto ld = lamb_dicke(omega_0, nu, -1);
  const double x0 = std::sqrt(k.hbar / (2.0 * k.m_e * nu));
  EXPECT_NEAR(ld.eta, (omega_0 - nu) / k.c * x0, 1e-18);
  EXPECT_TRUE(ld.ld_valid);
}

TEST(LambDicke, ThresholdAndErrors) {
  EXPECT_FALSE(lamb_dicke(7.39e11, 1.33e4, 0).ld_valid);
  EXPECT_THROW(lamb_dicke(0.0, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(lamb_dicke(1.0, 2.0, -1), std::invalid_argument);
}

TEST(Rabi, LinearInDriveField) {
  const auto sol = stark_solve(1e4, 3);
  const auto a = rabi_parameters(sol, 1e2);
  const auto b = rabi_parameters(sol, 1e3);
  EXPECT_NEAR(b.omega / a.omega, 10.0, 1e-12);
  EXPECT_NEAR(b.omega_tilde / a.omega_tilde, 10.0, 1e-12);
  EXPECT_GT(a.omega_tilde, 0.0);
  EXPECT_THROW(rabi_parameters(sol, 0.0), std::invalid_argument);
}

TEST(Rabi, DefinitionFromDipole) {
  const auto& k = constants();
  const auto sol = stark_solve(1e4, 3);
  const auto r = rabi_parameters(sol, 1e2);
  EXPECT_NEAR(r.omega, std::abs(sol.z_element(1, 2)) * k.e * 1e2 / (2.0 * k.hbar), 1e-6);
}

TEST(Drive, PhysicalPrimaryRegime) {
  const auto trap = TrapConfig::from_field(1e4, 5e-7);
  const auto sol = stark_solve(1e4, 3);
  const auto d = DriveSpec::physical(sol, trap, Sideband::carrier, 1e2, 0.3);
  EXPECT_NEAR(d.eta, 1.2e-4, 0.05 * 1.2e-4);
  EXPECT_DOUBLE_EQ(d.omega_l, d.omega_0);
  EXPECT_DOUBLE_EQ(d.phase, 0.3);
  EXPECT_NEAR(std::numbers::pi / d.omega, 9.1e-9, 0.2 * 9.1e-9);
}

TEST(Drive, RetuneUpdatesDetuningAndEta) {
  const auto trap = TrapConfig::from_field(1e4, 5e-7);
  const auto sol = stark_solve(1e4, 3);
  const auto d = DriveSpec::physical(sol, trap, Sideband::carrier, 1e2, 0.0);
  const auto red = d.retuned(Sideband::red);
  EXPECT_DOUBLE_EQ(red.omega_l, d.omega_0 - d.nu);
  EXPECT_LT(red.eta, d.eta);
  EXPECT_DOUBLE_EQ(red.omega, d.omega);
  const auto scaled = DriveSpec::scaled(1e9, 1e6, 0.01, 1e3, 2e3, Sideband::carrier);
  EXPECT_DOUBLE_EQ(scaled.retuned(Sideband::blue).eta, 0.01);
}

TEST(Drive, ScaledValidation) {
  EXPECT_THROW(DriveSpec::scaled(0.0, 1e6, 0.01, 1e3, 0.0, Sideband::red), std::invalid_argument);
  EXPECT_THROW(DriveSpec::scaled(1e5, 1e6, 0.01, 1e3, 0.0, Sideband::red), std::invalid_argument);
}

TEST(Sidebands, Parsing) {
  EXPECT_EQ(parse_sideband("red"), Sideband::red);
  EXPECT_EQ(parse_sideband("-1"), Sideband::red);
  EXPECT_EQ(parse_sideband("+1"), Sideband::blue);
  EXPECT_EQ(parse_sideband("carrier"), Sideband::carrier);
  EXPECT_THROW(parse_sideband("green"), std::invalid_argument);
  EXPECT_THROW(sideband_from_index(2), std::invalid_argument);
  EXPECT_EQ(to_string(Sideband::blue), "blue");
}

TEST(Pulses, InverseLinearInDriveField) {
  const auto sol = stark_solve(1e4, 3);
  const double eta = 1.2e-4;
  const double t2 = pi_pulse_duration(rabi_parameters(sol, 1e2).omega, eta, 0, Sideband::red);
  const double t3 = pi_pulse_duration(rabi_parameters(sol, 1e3).omega, eta, 0, Sideband::red);
  EXPECT_NEAR(t2 / t3, 10.0, 1e-12);
}

TEST(Pulses, SidebandRatesAndDurations) {
  EXPECT_DOUBLE_EQ(pi_pulse_duration(2.0, 0.1, 3, Sideband::carrier), std::numbers::pi / 2.0);
  EXPECT_DOUBLE_EQ(pi_pulse_duration(2.0, 0.1, 3, Sideband::blue),
                   std::numbers::pi / rabi_mk(3, 1, 2.0, 0.1));
}

TEST(Pulses, SequenceAndBudget) {
  PulseSequence seq;
  seq.add_pulse(Sideband::red, 3e-5, 0.0, 1.0, 0.1);
  seq.add_reset();
  seq.add_pulse(Sideband::red, 4e-5, 0.0, 1.0, 0.1);
  EXPECT_EQ(seq.steps().size(), 3u);
  EXPECT_NEAR(seq.total_duration(), 3e-5 + reset_duration + 4e-5, 1e-18);
  const auto b = coherence_budget(seq);
  EXPECT_TRUE(b.feasible);
  EXPECT_EQ(b.fractions.size(), 3u);
  EXPECT_NEAR(b.fractions[0], 0.3, 1e-12);
  seq.add_pulse(Sideband::red, 3e-5, 0.0, 1.0, 0.1);
  EXPECT_FALSE(coherence_budget(seq).feasible);
  EXPECT_THROW(seq.add_pulse(Sideband::red, 0.0, 0.0, 1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(coherence_budget(seq, 0.0), std::invalid_argument);
}
