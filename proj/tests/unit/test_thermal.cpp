#include <cmath>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hejc/thermal.hpp"
#include "hejc/trapdrive.hpp"
#include "oracles.hpp"

using namespace hejc;

namespace {
constexpr double nu_primary = 5.9e10;
}

TEST(Thermal, MatchesBoltzmannSum) {
  const auto& k = constants();
  for (double t : {4.2, 2.2, 1.2}) {
    const auto d = thermal_distribution(nu_primary, t, 40);
    const auto ref = oracle::boltzmann(k.hbar * nu_primary / (k.k_B * t), 40);
    for (int m = 0; m <= 40; ++m) {
      EXPECT_NEAR(d.probs[m] / ref[m], 1.0, 1e-12) << "T=" << t << " m=" << m;
    }
  }
}

TEST(Thermal, ExactGeometricRatio) {
  const auto d = thermal_distribution(nu_primary, 2.2, 30);
  for (int m = 0; m < 30; ++m) {
    EXPECT_NEAR(d.probs[m + 1] / d.probs[m], d.ratio, 1e-14);
  }
  EXPECT_NEAR(d.ratio, d.mean_m / (1.0 + d.mean_m), 1e-14);
}

TEST(Thermal, SumsToOneWithTail) {
  for (double t : {4.2, 2.2, 1.2, 0.3}) {
    const auto d = thermal_distribution(nu_primary, t, 25);
    const double kept = std::accumulate(d.probs.begin(), d.probs.end(), 0.0);
    EXPECT_NEAR(kept + d.tail_mass, 1.0, 1e-14);
  }
}

TEST(Thermal, OrderingWithTemperature) {
  const double p42 = thermal_distribution(nu_primary, 4.2, 5).probs[0];
  const double p22 = thermal_distribution(nu_primary, 2.2, 5).probs[0];
  const double p12 = thermal_distribution(nu_primary, 1.2, 5).probs[0];
  EXPECT_GT(p12, p22);
  EXPECT_GT(p22, p42);
}

TEST(Thermal, MeanOccupationAtHeliumTemperature) {
  const auto& k = constants();
  const double x = k.hbar * nu_primary / (k.k_B * 4.2);
  EXPECT_NEAR(thermal_distribution(nu_primary, 4.2, 0).mean_m, 1.0 / (std::exp(x) - 1.0), 1e-12);
}

TEST(Thermal, ColdLimitResolvesDeficit) {
  const auto d = thermal_distribution(nu_primary, 0.01, 10);
  EXPECT_GT(d.ground_deficit, 0.0);
  EXPECT_LT(d.ground_deficit, 1e-19);
  EXPECT_DOUBLE_EQ(d.probs[0], 1.0);
}

TEST(Thermal, FromMean) {
  const auto d = thermal_from_mean(2.0, 200);
  double mean = 0.0;
  for (int m = 0; m <= 200; ++m) mean += m * d.probs[m];
  EXPECT_NEAR(mean, 2.0, 1e-9);
  EXPECT_NEAR(d.probs[0], 1.0 / 3.0, 1e-14);
  const auto zero = thermal_from_mean(0.0, 5);
  EXPECT_DOUBLE_EQ(zero.probs[0], 1.0);
  EXPECT_DOUBLE_EQ(zero.probs[1], 0.0);
  EXPECT_DOUBLE_EQ(zero.tail_mass, 0.0);
}

TEST(Thermal, Validation) {
  EXPECT_THROW(thermal_distribution(0.0, 1.0, 3), std::invalid_argument);
  EXPECT_THROW(thermal_distribution(1e10, 0.0, 3), std::invalid_argument);
  EXPECT_THROW(thermal_distribution(1e10, 1.0, -1), std::invalid_argument);
  EXPECT_THROW(thermal_from_mean(-1.0, 3), std::invalid_argument);
}

TEST(Thermal, MixtureIsRenormalizedDiagonal) {
  const auto d = thermal_from_mean(2.0, 10);
  const MixedState mix = thermal_mixture(d);
  EXPECT_NEAR(mix.total_probability(), 1.0, 1e-12);
  EXPECT_EQ(mix.components().size(), 11u);
  EXPECT_NEAR(mix.population(3, Level::g) / mix.population(2, Level::g), d.ratio, 1e-12);
  EXPECT_DOUBLE_EQ(mix.population(Level::e), 0.0);
}
