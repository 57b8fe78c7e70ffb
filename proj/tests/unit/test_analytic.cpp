#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hejc/analytic.hpp"
#include "hejc/error.hpp"
#include "hejc/hamiltonian.hpp"
#include "oracles.hpp"

using namespace hejc;

namespace {

constexpr cplx I{0.0, 1.0};

HybridState random_state(int n_max, unsigned seed, int top) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  CVector v = CVector::Zero(2 * (n_max + 1));
  for (int i = 0; i < 2 * (top + 1); ++i) v(i) = {g(rng), g(rng)};
  HybridState s(n_max, v);
  s.normalize();
  return s;
}

CMatrix analytic_matrix(int n_max, Sideband s, double t, double omega, double eta, double phase) {
  const int dim = 2 * (n_max + 1);
  CMatrix u(dim, dim);
  for (int j = 0; j < dim; ++j) {
    CVector e = CVector::Zero(dim);
    e(j) = 1.0;
    u.col(j) = analytic_evolve(HybridState(n_max, e), s, t, omega, eta, phase, false).amplitudes();
  }
  return u;
}

double expectation(const HybridState& s, const CMatrix& op) {
  return s.amplitudes().dot(op * s.amplitudes()).real();
}

}  // namespace

TEST(RabiMk, Definition) {
  EXPECT_DOUBLE_EQ(rabi_mk(5, 0, 3.0, 0.1), 3.0);
  EXPECT_NEAR(rabi_mk(3, 1, 3.0, 0.1), 3.0 * 0.1 * 2.0, 1e-15);
  EXPECT_THROW(rabi_mk(0, 2, 1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(rabi_mk(-1, 1, 1.0, 0.1), std::invalid_argument);
}

TEST(Analytic, MatchesMatrixExponential) {
  const auto& k = constants();
  const int n_max = 8;
  const double omega = 1.3e3;
  const double eta = 0.07;
  for (Sideband s : {Sideband::red, Sideband::carrier, Sideband::blue}) {
    for (double phase : {0.0, 0.8, -2.1}) {
      const CMatrix h = effective_hamiltonian(s, omega, eta, phase, n_max) / k.hbar;
      for (double t : {1e-5, 3.7e-3, 0.11}) {
        const CMatrix ref = oracle::expm_pade(h, t);
        const CMatrix got = analytic_matrix(n_max, s, t, omega, eta, phase);
        EXPECT_LT((ref - got).cwiseAbs().maxCoeff(), 1e-8)
            << to_string(s) << " phase=" << phase << " t=" << t;
      }
    }
  }
}

TEST(Analytic, Unitary) {
  for (Sideband s : {Sideband::red, Sideband::carrier, Sideband::blue}) {
    const CMatrix u = analytic_matrix(10, s, 0.37, 5.0, 0.2, 1.0);
    EXPECT_LT((u.adjoint() * u - CMatrix::Identity(22, 22)).norm(), 1e-9);
  }
}

TEST(Analytic, GroupComposition) {
  const auto s0 = random_state(10, 7, 6);
  for (Sideband s : {Sideband::red, Sideband::blue}) {
    const auto once = analytic_evolve(s0, s, 0.9, 4.0, 0.1, 0.5, false);
    const auto twice = analytic_evolve(analytic_evolve(s0, s, 0.4, 4.0, 0.1, 0.5, false), s, 0.5,
                                       4.0, 0.1, 0.5, false);
    EXPECT_LT((once.amplitudes() - twice.amplitudes()).norm(), 1e-12);
  }
}

TEST(Analytic, ConservationLaws) {
  const auto s0 = random_state(12, 11, 7);
  const CMatrix jcm_n = excitation_operator(12, +1);
  const CMatrix anti_n = excitation_operator(12, -1);
  for (double t : {0.1, 1.0, 10.0}) {
    const auto red = analytic_evolve(s0, Sideband::red, t, 3.0, 0.2, 0.3, false);
    EXPECT_NEAR(expectation(red, jcm_n), expectation(s0, jcm_n), 1e-9);
    const auto blue = analytic_evolve(s0, Sideband::blue, t, 3.0, 0.2, 0.3, false);
    EXPECT_NEAR(expectation(blue, anti_n), expectation(s0, anti_n), 1e-9);
    const auto car = analytic_evolve(s0, Sideband::carrier, t, 3.0, 0.2, 0.3, false);
    EXPECT_NEAR(car.mean_phonon(), s0.mean_phonon(), 1e-9);
  }
}

TEST(Analytic, RedSidebandTransferAmplitudes) {
  // |m,g> -> cos|m,g> + e^{i phi} sin|m-1,e>
  const double omega = 2.0;
  const double eta = 0.1;
  const double phi = 0.6;
  const int m = 3;
  const double rate = rabi_mk(m - 1, 1, omega, eta);
  const double t = 0.37 / rate;
  const auto s = analytic_evolve(HybridState::fock(6, m, Level::g), Sideband::red, t, omega, eta, phi);
  EXPECT_NEAR(std::abs(s.amplitude(m, Level::g) - std::cos(rate * t)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s.amplitude(m - 1, Level::e) - std::exp(I * phi) * std::sin(rate * t)), 0.0,
              1e-14);
}

TEST(Analytic, CarrierPiPulseInverts) {
  const double omega = 3.5e8;
  const double t = transfer_duration(0, Level::g, Sideband::carrier, omega, 1e-4);
  const auto s = analytic_evolve(HybridState::fock(4, 0, Level::g), Sideband::carrier, t, omega,
                                 1e-4, 0.0);
  EXPECT_GE(s.population(0, Level::e), 1.0 - 1e-8);
}

TEST(Analytic, DarkStatesAndTruncationEdges) {
  const auto ground = HybridState::fock(5, 0, Level::g);
  const auto red = analytic_evolve(ground, Sideband::red, 1.0, 2.0, 0.1, 0.0);
  EXPECT_DOUBLE_EQ(red.population(0, Level::g), 1.0);
  EXPECT_THROW(transfer_duration(0, Level::g, Sideband::red, 1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(transfer_duration(0, Level::e, Sideband::blue, 1.0, 0.1), std::invalid_argument);
  const auto top = HybridState::fock(5, 4, Level::g);
  const double t = transfer_duration(4, Level::g, Sideband::blue, 2.0, 0.1);
  EXPECT_THROW(analytic_evolve(top, Sideband::blue, t, 2.0, 0.1, 0.0), TruncationOverflow);
}

TEST(Analytic, TraceSampling) {
  const auto d = DriveSpec::scaled(1e9, 1e6, 0.01, 1e3, 0.0, Sideband::carrier);
  const double t = transfer_duration(0, Level::g, Sideband::carrier, d.omega, d.eta);
  const auto rows = analytic_trace(HybridState::fock(3, 0, Level::g), d, t, 5);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_DOUBLE_EQ(rows.front().t, 0.0);
  EXPECT_DOUBLE_EQ(rows.back().t, t);
  EXPECT_NEAR(rows[2].p_e, 0.5, 1e-12);
  for (const auto& r : rows) EXPECT_NEAR(r.norm, 1.0, 1e-12);
  EXPECT_THROW(analytic_trace(HybridState(3), d, t, 1), std::invalid_argument);
}
