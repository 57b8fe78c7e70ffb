#pragma once

#include <cstdint>
#include <string>

#include "hejc/propagator.hpp"
#include "hejc/state.hpp"
#include "hejc/trapdrive.hpp"

namespace hejc {

struct RwaScenario {
  std::string name;
  DriveSpec drive;
  HybridState initial{1};
  double duration = 0.0;  ///< s
};

/// Red-sideband transfer |1,g> -> |0,e> with separated scales:
/// omega_0 = 1000 nu, Omega = 1e-3 nu * omega_scale, Omega_tilde = 2 Omega,
/// duration pi / (2 Omega_{0,1}). nu = 1e6 rad/s.
RwaScenario scaled_red_sideband(double omega_scale = 1.0, double eta = 0.01, int n_max = 10);

/// Carrier inversion |0,g> -> |0,e> at the physical parameters
/// E_perp = 1e4 V/m, h = 5e-7 m, E_z = 1e2 V/m; duration pi / (2 Omega).
RwaScenario literal_carrier(int n_max = 4);

struct RwaReport {
  std::string scenario;
  double eta = 0.0;
  bool ld_valid = false;
  double fidelity = 0.0;     ///< |<analytic|full>|^2
  double infidelity = 0.0;   ///< 1 - fidelity
  double p_e_full = 0.0;     ///< excited population after full propagation
  double p_e_analytic = 0.0;
  double ld_overlap = 0.0;   ///< |<lamb_dicke|full>|^2, NaN when skipped
  double norm_drift = 0.0;
  double guard_population = 0.0;
  std::uint64_t steps = 0;
  int refinements = 0;
  Integrator integrator = Integrator::direct;
};

/// Propagates the scenario with the full coupling (and, if requested, the
/// first-order Lamb-Dicke coupling) and compares with the analytic map.
RwaReport rwa_report(const RwaScenario& scenario, const StepPolicy& policy = {},
                     bool compare_lamb_dicke = true);

}  // namespace hejc
