#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hejc/constants.hpp"
#include "hejc/format.hpp"
#include "hejc/laguerre.hpp"
#include "oracles.hpp"

using namespace hejc;

TEST(Constants, LambdaFactorOfHelium4) {
  EXPECT_NEAR(lambda_factor(helium4_dielectric), 0.0069039, 1e-7);
  EXPECT_THROW(lambda_factor(1.0), std::invalid_argument);
  EXPECT_THROW(lambda_factor(0.5), std::invalid_argument);
}

TEST(Constants, BohrRadiusAndRydberg) {
  const auto& k = constants();
  EXPECT_NEAR(k.r_B, 76e-10, 0.02 * 76e-10);
  EXPECT_NEAR(to_electronvolt(k.R_He), 6.5e-4, 0.02 * 6.5e-4);
  EXPECT_DOUBLE_EQ(k.coulomb, 1.0 / (4.0 * std::numbers::pi * codata::vacuum_permittivity));
}

TEST(Constants, RydbergFormsAgree) {
  const auto& k = constants();
  const auto scale = effective_rydberg_and_bohr(k);
  EXPECT_NEAR(scale.rydberg / rydberg_charge_form(k), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(scale.bohr_radius, k.r_B);
  EXPECT_NEAR(k.hbar * k.hbar / (2.0 * k.m_e * k.r_B * k.r_B) / k.R_He, 1.0, 1e-12);
}

TEST(Constants, ScaleWithDielectric) {
  const auto a = Constants::make(1.0568);
  const auto b = Constants::make(1.1);
  EXPECT_LT(b.r_B, a.r_B);
  EXPECT_GT(b.R_He, a.R_He);
}

TEST(Laguerre, MatchesExplicitSum) {
  for (int alpha : {0, 1, 2, 5}) {
    for (int n = 0; n <= 12; ++n) {
      for (double x : {0.0, 0.3, 1.0, 2.5, 7.0, 15.0}) {
        const double ref = oracle::laguerre_sum(n, alpha, x);
        EXPECT_NEAR(laguerre(n, alpha, x), ref, 1e-10 * std::max(1.0, std::abs(ref)))
            << "n=" << n << " alpha=" << alpha << " x=" << x;
      }
    }
  }
}

TEST(Laguerre, LowOrdersClosedForm) {
  const double x = 0.7;
  EXPECT_DOUBLE_EQ(laguerre(0, 1, x), 1.0);
  EXPECT_DOUBLE_EQ(laguerre(1, 1, x), 2.0 - x);
  EXPECT_NEAR(laguerre(2, 1, x), 0.5 * x * x - 3.0 * x + 3.0, 1e-15);
}

TEST(Laguerre, ValueAtZero) {
  // L_n^(a)(0) = C(n + a, n)
  EXPECT_NEAR(laguerre(6, 1, 0.0), 7.0, 1e-12);
  EXPECT_NEAR(laguerre(4, 2, 0.0), 15.0, 1e-12);
}

TEST(Laguerre, RejectsNegativeArguments) {
  EXPECT_THROW(laguerre(-1, 1, 0.5), std::invalid_argument);
  EXPECT_THROW(laguerre(2, -1, 0.5), std::invalid_argument);
}

TEST(Format, NineSignificantDigits) {
  EXPECT_EQ(format_sci(1.0), "1.00000000e+00");
  EXPECT_EQ(format_sci(-6.48501e-4), "-6.48501000e-04");
  EXPECT_EQ(format_sci(1.133e12), "1.13300000e+12");
  EXPECT_EQ(format_sci(0.0), "0.00000000e+00");
}
