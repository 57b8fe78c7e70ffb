#include "hejc/rwa.hpp"

#include <cmath>
#include <limits>

#include "hejc/analytic.hpp"
#include "hejc/hydrogen1d.hpp"

namespace hejc {

RwaScenario scaled_red_sideband(double omega_scale, double eta, int n_max) {
  const double nu = 1e6;
  const double omega = 1e-3 * nu * omega_scale;
  RwaScenario s;
  s.name = "scaled-red-sideband";
  s.drive = DriveSpec::scaled(1000.0 * nu, nu, eta, omega, 2.0 * omega, Sideband::red);
  s.initial = HybridState::fock(n_max, 1, Level::g);
  s.duration = transfer_duration(1, Level::g, Sideband::red, omega, eta);
  return s;
}

RwaScenario literal_carrier(int n_max) {
  const auto trap = TrapConfig::from_field(1e4, 5e-7);
  const auto sol = stark_solve(trap.e_perp, 3);
  RwaScenario s;
  s.name = "literal-carrier";
  s.drive = DriveSpec::physical(sol, trap, Sideband::carrier, 1e2, 0.0);
  s.initial = HybridState::fock(n_max, 0, Level::g);
  s.duration = transfer_duration(0, Level::g, Sideband::carrier, s.drive.omega, s.drive.eta);
  return s;
}

RwaReport rwa_report(const RwaScenario& scenario, const StepPolicy& policy,
                     bool compare_lamb_dicke) {
  RwaReport r;
  r.scenario = scenario.name;
  r.eta = scenario.drive.eta;
  r.ld_valid = scenario.drive.ld_valid;

  const HybridState exact = analytic_evolve(scenario.initial, scenario.drive, scenario.duration);
  const Propagation full =
      numeric_evolve(scenario.initial, scenario.drive, scenario.duration, CouplingModel::full, policy);
  r.fidelity = fidelity(exact, full.state);
  r.infidelity = 1.0 - r.fidelity;
  r.p_e_full = full.state.population(Level::e);
  r.p_e_analytic = exact.population(Level::e);
  r.norm_drift = full.norm_drift;
  r.guard_population = full.state.guard_population();
  r.steps = full.steps;
  r.refinements = full.refinements;
  r.integrator = full.integrator;
  r.ld_overlap = std::numeric_limits<double>::quiet_NaN();
  if (compare_lamb_dicke) {
    const Propagation ld = numeric_evolve(scenario.initial, scenario.drive, scenario.duration,
                                          CouplingModel::lamb_dicke, policy);
    r.ld_overlap = fidelity(ld.state, full.state);
  }
  return r;
}

}  // namespace hejc
