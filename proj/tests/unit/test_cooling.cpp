#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hejc/analytic.hpp"
#include "hejc/cooling.hpp"
#include "hejc/thermal.hpp"
#include "oracles.hpp"

using namespace hejc;

namespace {

DriveSpec red_drive() { return DriveSpec::scaled(1e9, 1e6, 0.01, 1e3, 2e3, Sideband::red); }

std::vector<double> fock_populations(const MixedState& mix) {
  std::vector<double> p(static_cast<std::size_t>(mix.n_max()) + 1);
  for (int m = 0; m <= mix.n_max(); ++m) p[m] = mix.population(m, Level::g) + mix.population(m, Level::e);
  return p;
}

MixedState uniform_mixture(int n_max) {
  std::vector<MixedState::Component> c;
  for (int m = 0; m <= n_max; ++m) c.push_back({1.0 / (n_max + 1), HybridState::fock(n_max, m, Level::g)});
  return MixedState(std::move(c));
}

}  // namespace

TEST(Reset, MovesExcitedToGroundKeepingFock) {
  CVector v = CVector::Zero(8);
  v(HybridState::index(1, Level::g)) = std::sqrt(0.3);
  v(HybridState::index(2, Level::e)) = std::sqrt(0.7);
  const auto out = reset_to_ground(MixedState::pure(HybridState(3, v)));
  EXPECT_NEAR(out.population(1, Level::g), 0.3, 1e-15);
  EXPECT_NEAR(out.population(2, Level::g), 0.7, 1e-15);
  EXPECT_DOUBLE_EQ(out.population(Level::e), 0.0);
}

TEST(Reset, MatchesKrausMapOnDensityMatrix) {
  CVector v = CVector::Zero(8);
  v(HybridState::index(0, Level::g)) = {0.6, 0.0};
  v(HybridState::index(1, Level::g)) = {0.0, 0.48};
  v(HybridState::index(0, Level::e)) = {0.64, 0.0};
  HybridState s(3, v);
  s.normalize();
  const MixedState mix = MixedState::pure(s);
  const CMatrix rho = mix.density_matrix();
  // K_g = |g><g| (x) 1, K_e = |g><e| (x) 1
  CMatrix kg = CMatrix::Zero(8, 8);
  CMatrix ke = CMatrix::Zero(8, 8);
  for (int m = 0; m <= 3; ++m) {
    kg(HybridState::index(m, Level::g), HybridState::index(m, Level::g)) = 1.0;
    ke(HybridState::index(m, Level::g), HybridState::index(m, Level::e)) = 1.0;
  }
  const CMatrix expected = kg * rho * kg.adjoint() + ke * rho * ke.adjoint();
  EXPECT_LT((reset_to_ground(mix).density_matrix() - expected).norm(), 1e-14);
}

TEST(Cooling, IdealizedCycleLowersByOne) {
  const auto out = cooling_cycle(MixedState::pure(HybridState::fock(5, 3, Level::g)),
                                 IdealizedCooling{}, red_drive());
  EXPECT_NEAR(out.population(2, Level::g), 1.0, 1e-15);
  const auto ground = cooling_cycle(MixedState::pure(HybridState(5)), IdealizedCooling{}, red_drive());
  EXPECT_NEAR(ground.population(0, Level::g), 1.0, 1e-15);
}

TEST(Cooling, IdealizedDrainsTopLevelInExactlyNMaxCycles) {
  CoolingPlan plan;
  plan.schedule = CoolingSchedule::idealized;
  plan.target_ground = 1.0 - 1e-12;
  plan.max_cycles = 100;
  const auto run = run_cooling(uniform_mixture(30), plan, red_drive());
  EXPECT_TRUE(run.reached);
  EXPECT_EQ(run.cycles(), 30);
  EXPECT_TRUE(run.monotone);
}

TEST(Cooling, PulsedMatchesPopulationRecursion) {
  const auto d = red_drive();
  MixedState mix = thermal_mixture(thermal_from_mean(2.0, 20));
  std::vector<double> ref = fock_populations(mix);
  for (int target : {5, 3, 1, 2}) {
    mix = cooling_cycle(mix, PulsedCooling{target}, d);
    const double t = transfer_duration(target, Level::g, Sideband::red, d.omega, d.eta);
    ref = oracle::cooling_step(ref, d.omega, d.eta, t);
    const auto got = fock_populations(mix);
    for (std::size_t m = 0; m < ref.size(); ++m) EXPECT_NEAR(got[m], ref[m], 1e-12) << "m=" << m;
    EXPECT_DOUBLE_EQ(mix.population(Level::e), 0.0);
  }
}

TEST(Cooling, TargetOnePulseLeavesSquareLevelsDark) {
  // t = pi / (2 Omega eta) gives sin^2(pi sqrt(m) / 2) = 0 for m = 4, 9, 16, 25.
  const auto out = cooling_cycle(MixedState::pure(HybridState::fock(30, 4, Level::g)),
                                 PulsedCooling{1}, red_drive());
  EXPECT_NEAR(out.population(4, Level::g), 1.0, 1e-12);
}

TEST(Cooling, FixedTargetPlateausBelowGoal) {
  CoolingPlan plan;
  plan.schedule = CoolingSchedule::fixed;
  plan.target_m = 1;
  plan.max_cycles = 200;
  const auto run = run_cooling(thermal_mixture(thermal_from_mean(2.0, 30)), plan, red_drive());
  EXPECT_FALSE(run.reached);
  EXPECT_TRUE(run.monotone);
  EXPECT_LT(run.history.back().ground_population, 0.9);
}

TEST(Cooling, SweepReachesGoalMonotonically) {
  CoolingPlan plan;
  const auto run = run_cooling(thermal_mixture(thermal_from_mean(2.0, 30)), plan, red_drive());
  EXPECT_TRUE(run.reached);
  EXPECT_TRUE(run.monotone);
  EXPECT_GE(run.history.back().ground_population, 0.99);
  EXPECT_EQ(run.history.front().cycle, 0);
  EXPECT_EQ(run.history[1].target_m, 10);
  EXPECT_EQ(run.sequence.steps().size(), 2u * static_cast<std::size_t>(run.cycles()));
  for (std::size_t i = 1; i < run.history.size(); ++i) {
    EXPECT_GE(run.history[i].ground_population, run.history[i - 1].ground_population - 1e-14);
    EXPECT_GT(run.history[i].elapsed, run.history[i - 1].elapsed);
  }
}

TEST(Cooling, Validation) {
  const auto mix = MixedState::pure(HybridState::fock(4, 2, Level::g));
  EXPECT_THROW(cooling_cycle(mix, PulsedCooling{0}, red_drive()), std::invalid_argument);
  CoolingPlan plan;
  plan.schedule = CoolingSchedule::fixed;
  plan.target_m = 0;
  EXPECT_THROW(run_cooling(mix, plan, red_drive()), std::invalid_argument);
  plan.schedule = CoolingSchedule::sweep;
  plan.sweep_top = 0;
  EXPECT_THROW(run_cooling(mix, plan, red_drive()), std::invalid_argument);
}
