#pragma once

// Closed-form evolution under the carrier, red-sideband (JCM) and
// blue-sideband (anti-JCM) effective Hamiltonians. Each drive couples the
// state space in independent two-dimensional blocks:
//   carrier  |m,g> <-> |m,e>      at Omega_{m,0} = Omega
//   red      |m,g> <-> |m-1,e>    at Omega_{m-1,1}
//   blue     |m,g> <-> |m+1,e>    at Omega_{m,1}
// The laser phase phi plays the role of the phase theta_L of the transfer
// amplitudes, e.g. red: |m,g> -> cos|m,g> + e^{i phi} sin|m-1,e>.

#include <vector>

#include "hejc/sideband.hpp"
#include "hejc/state.hpp"
#include "hejc/trapdrive.hpp"

namespace hejc {

/// Omega eta^k sqrt((m+k)!/m!) for k in {0, 1}. Throws std::invalid_argument
/// for other k or m < 0.
double rabi_mk(int m, int k, double omega, double eta);

/// Exact evolution for time t (seconds). Blocks whose partner lies outside the
/// truncation are left unchanged, matching the truncated effective Hamiltonian.
/// With `enforce_guard`, throws TruncationOverflow if the result populates the
/// two highest Fock levels.
HybridState analytic_evolve(const HybridState& state, Sideband sideband, double t, double omega,
                            double eta, double phase, bool enforce_guard = true);

HybridState analytic_evolve(const HybridState& state, const DriveSpec& drive, double t,
                            bool enforce_guard = true);

/// Duration that fully transfers |m, level> to its partner: pi / (2 Omega_eff).
/// Throws std::invalid_argument when the state is dark for this sideband.
double transfer_duration(int m, Level level, Sideband sideband, double omega, double eta);

struct TraceRow {
  double t;  ///< s
  double p_g;
  double p_e;
  double mean_m;
  double norm;
};

TraceRow observe(double t, const HybridState& s);

/// Samples the analytic evolution at n_samples evenly spaced times in [0, t_end].
std::vector<TraceRow> analytic_trace(const HybridState& state, const DriveSpec& drive, double t_end,
                                     int n_samples);

}  // namespace hejc
