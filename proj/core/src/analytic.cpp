#include "hejc/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hejc {

namespace {
constexpr cplx I{0.0, 1.0};
}

double rabi_mk(int m, int k, double omega, double eta) {
  if (m < 0) throw std::invalid_argument("rabi_mk: m must be >= 0");
  if (k == 0) return omega;
  if (k == 1) return omega * eta * std::sqrt(m + 1.0);
  throw std::invalid_argument("rabi_mk: only sideband orders k = 0, 1 are supported");
}

HybridState analytic_evolve(const HybridState& state, Sideband sideband, double t, double omega,
                            double eta, double phase, bool enforce_guard) {
  const int n_max = state.n_max();
  const CVector& in = state.amplitudes();
  CVector out = in;
  // Each block couples lower = |m,g> with upper = |m',e>. With coupling
  // hbar*c*e^{i chi} from lower to upper:
  //   lower -> cos(c t) lower - i e^{i chi} sin(c t) upper
  //   upper -> cos(c t) upper - i e^{-i chi} sin(c t) lower
  // Carrier: chi = phi. Sidebands carry the extra i, chi = phi + pi/2.
  const auto rotate = [&](Eigen::Index lower, Eigen::Index upper, double rate, cplx coupling) {
    const double c = std::cos(rate * t);
    const double s = std::sin(rate * t);
    const cplx to_upper = -I * coupling * s;
    const cplx to_lower = -I * std::conj(coupling) * s;
    out(lower) = c * in(lower) + to_lower * in(upper);
    out(upper) = c * in(upper) + to_upper * in(lower);
  };
  const cplx carrier = std::exp(I * phase);
  const cplx side = I * carrier;
  switch (sideband) {
    case Sideband::carrier:
      for (int m = 0; m <= n_max; ++m) {
        rotate(HybridState::index(m, Level::g), HybridState::index(m, Level::e), omega, carrier);
      }
      break;
    case Sideband::red:
      for (int m = 1; m <= n_max; ++m) {
        rotate(HybridState::index(m, Level::g), HybridState::index(m - 1, Level::e),
               rabi_mk(m - 1, 1, omega, eta), side);
      }
      break;
    case Sideband::blue:
      for (int m = 0; m < n_max; ++m) {
        rotate(HybridState::index(m, Level::g), HybridState::index(m + 1, Level::e),
               rabi_mk(m, 1, omega, eta), side);
      }
      break;
  }
  HybridState result(n_max, std::move(out));
  if (enforce_guard) check_truncation(result, "analytic_evolve");
  return result;
}

HybridState analytic_evolve(const HybridState& state, const DriveSpec& drive, double t,
                            bool enforce_guard) {
  return analytic_evolve(state, drive.sideband, t, drive.omega, drive.eta, drive.phase,
                         enforce_guard);
}

double transfer_duration(int m, Level level, Sideband sideband, double omega, double eta) {
  double rate = 0.0;
  switch (sideband) {
    case Sideband::carrier: rate = omega; break;
    case Sideband::red:
      if (level == Level::g) {
        if (m < 1) throw std::invalid_argument("transfer_duration: |0,g> is dark on the red sideband");
        rate = rabi_mk(m - 1, 1, omega, eta);
      } else {
        rate = rabi_mk(m, 1, omega, eta);
      }
      break;
    case Sideband::blue:
      if (level == Level::e) {
        if (m < 1) throw std::invalid_argument("transfer_duration: |0,e> is dark on the blue sideband");
        rate = rabi_mk(m - 1, 1, omega, eta);
      } else {
        rate = rabi_mk(m, 1, omega, eta);
      }
      break;
  }
  if (!(rate > 0.0)) throw std::invalid_argument("transfer_duration: zero coupling");
  return std::numbers::pi / (2.0 * rate);
}

TraceRow observe(double t, const HybridState& s) {
  return {t, s.population(Level::g), s.population(Level::e), s.mean_phonon(), s.norm()};
}

std::vector<TraceRow> analytic_trace(const HybridState& state, const DriveSpec& drive, double t_end,
                                     int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("analytic_trace: need at least 2 samples");
  std::vector<TraceRow> rows;
  rows.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double t = t_end * i / (n_samples - 1);
    rows.push_back(observe(t, analytic_evolve(state, drive, t)));
  }
  return rows;
}

}  // namespace hejc
