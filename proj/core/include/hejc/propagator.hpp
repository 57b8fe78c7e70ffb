#pragma once

// Brute-force propagation of the driven Hamiltonian, used to validate the
// Lamb-Dicke and rotating-wave steps that lead to the effective models.
//
// Both integrators are time-ordered products of short-interval exponentials
// sampled at interval midpoints (second order in the interval length), with
// step halving until two successive refinements agree:
//  - direct:   steps H_I(t) in the interaction picture, dt <= 1/(20 f_max)
//              with f_max = 2 omega_0 + 2 nu;
//  - periodic: the lab-frame Hamiltonian repeats every 2 pi/omega_l, so the
//              one-period propagator is built once, raised to the number of
//              whole periods by repeated squaring, and the remainder is
//              stepped directly. The result is mapped back to the interaction
//              picture. This makes runs of 10^7 drive periods affordable.

#include <cstdint>

#include "hejc/hamiltonian.hpp"
#include "hejc/state.hpp"
#include "hejc/trapdrive.hpp"

namespace hejc {

enum class Integrator { automatic, direct, periodic };

struct StepPolicy {
  double resolution = 20.0;  ///< direct: steps per unit of 1/f_max
  double tolerance = 1e-6;   ///< state distance between successive refinements
  double norm_drift_limit = 1e-6;
  int max_refinements = 8;
  /// automatic mode switches to the periodic integrator above this many steps.
  std::uint64_t direct_step_limit = 4'000'000;
  int initial_period_steps = 64;
  Integrator integrator = Integrator::automatic;
  bool enforce_guard = true;
};

struct Propagation {
  HybridState state;
  double norm_drift = 0.0;        ///< | |psi(t)| - |psi(0)| |
  std::uint64_t steps = 0;        ///< short-interval steps in the accepted run (time-equivalent)
  int refinements = 0;            ///< halvings performed
  double refinement_distance = 0; ///< |psi_fine - psi_coarse| at acceptance
  Integrator integrator = Integrator::direct;
};

/// Evolves `state` (interaction picture) from t_start to t_end. Throws
/// StepSizeError when refinement does not converge or the norm drifts, and
/// TruncationOverflow when the guard band is populated.
Propagation numeric_evolve(const HybridState& state, const DriveSpec& drive, double t_start,
                           double t_end, CouplingModel model, const StepPolicy& policy = {});

inline Propagation numeric_evolve(const HybridState& state, const DriveSpec& drive, double t,
                                  CouplingModel model, const StepPolicy& policy = {}) {
  return numeric_evolve(state, drive, 0.0, t, model, policy);
}

/// exp(-i H dt) for Hermitian H, by eigendecomposition.
CMatrix expm_hermitian(const CMatrix& h, double dt);

/// psi <- exp(-i H dt) psi. Uses a Taylor series summed to round-off when
/// |H| dt is small, otherwise expm_hermitian.
void apply_expm_hermitian(const CMatrix& h, double dt, CVector& psi);

}  // namespace hejc
