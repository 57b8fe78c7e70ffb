#include <cmath>

#include <gtest/gtest.h>

#include "hejc/rwa.hpp"

using namespace hejc;

TEST(Scenarios, ScaledRedSidebandSetup) {
  const auto s = scaled_red_sideband();
  EXPECT_DOUBLE_EQ(s.drive.omega_0, 1000.0 * s.drive.nu);
  EXPECT_DOUBLE_EQ(s.drive.omega, 1e-3 * s.drive.nu);
  EXPECT_DOUBLE_EQ(s.drive.eta, 0.01);
  EXPECT_EQ(s.drive.sideband, Sideband::red);
  EXPECT_DOUBLE_EQ(s.initial.population(1, Level::g), 1.0);
}

TEST(Scenarios, LiteralCarrierSetup) {
  const auto s = literal_carrier();
  EXPECT_NEAR(s.duration, 4.4e-9, 0.2 * 4.4e-9);
  EXPECT_EQ(s.drive.sideband, Sideband::carrier);
  EXPECT_TRUE(s.drive.ld_valid);
}

TEST(RwaReport, StrongerDriveDegradesFidelity) {
  const auto weak = rwa_report(scaled_red_sideband(1.0), {}, false);
  const auto strong = rwa_report(scaled_red_sideband(10.0), {}, false);
  EXPECT_GE(weak.fidelity, 0.99);
  EXPECT_LT(strong.fidelity, weak.fidelity);
  EXPECT_NEAR(weak.p_e_analytic, 1.0, 1e-12);
  EXPECT_LT(weak.norm_drift, 1e-9);
  EXPECT_TRUE(std::isnan(weak.ld_overlap));
}

TEST(RwaReport, LargeEtaBreaksLambDicke) {
  const auto small = rwa_report(scaled_red_sideband(10.0, 0.01), {}, true);
  const auto large = rwa_report(scaled_red_sideband(10.0, 0.3), {}, true);
  EXPECT_GT(small.ld_overlap, 0.9999);
  EXPECT_LT(large.ld_overlap, small.ld_overlap);
  EXPECT_FALSE(scaled_red_sideband(1.0, 0.3).drive.ld_valid);
}
