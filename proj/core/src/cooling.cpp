#include "hejc/cooling.hpp"

#include <stdexcept>

#include "hejc/analytic.hpp"

namespace hejc {

namespace {

HybridState project(const HybridState& s, Level from) {
  CVector v = CVector::Zero(s.dim());
  for (int m = 0; m <= s.n_max(); ++m) v(HybridState::index(m, Level::g)) = s.amplitude(m, from);
  return HybridState(s.n_max(), std::move(v));
}

double pulse_duration(int target_m, const DriveSpec& drive) {
  return transfer_duration(target_m, Level::g, Sideband::red, drive.omega, drive.eta);
}

}  // namespace

MixedState reset_to_ground(const MixedState& mix) {
  std::vector<MixedState::Component> out;
  for (const auto& c : mix.components()) {
    for (Level level : {Level::g, Level::e}) {
      HybridState part = project(c.state, level);
      const double w = part.norm();
      if (w == 0.0) continue;
      part.amplitudes() /= w;
      out.push_back({c.probability * w * w, std::move(part)});
    }
  }
  MixedState result(std::move(out));
  result.compact();
  return result;
}

MixedState cooling_cycle(const MixedState& mix, const CoolingMode& mode, const DriveSpec& drive) {
  if (const auto* pulsed = std::get_if<PulsedCooling>(&mode)) {
    if (pulsed->target_m < 1) throw std::invalid_argument("cooling_cycle: target_m must be >= 1");
    const double t = pulse_duration(pulsed->target_m, drive);
    std::vector<MixedState::Component> evolved;
    evolved.reserve(mix.components().size());
    // The red sideband never raises the Fock index, so the guard band can stay populated.
    for (const auto& c : mix.components()) {
      evolved.push_back({c.probability, analytic_evolve(c.state, Sideband::red, t, drive.omega,
                                                        drive.eta, drive.phase, false)});
    }
    return reset_to_ground(MixedState(std::move(evolved)));
  }

  // Idealized: reset, then |m,g> -> |m-1,g> for m >= 1 and |0,g> kept.
  const MixedState ground = reset_to_ground(mix);
  std::vector<MixedState::Component> out;
  for (const auto& c : ground.components()) {
    const HybridState& s = c.state;
    const double p0 = s.population(0, Level::g);
    if (p0 > 0.0) out.push_back({c.probability * p0, HybridState::fock(s.n_max(), 0, Level::g)});
    CVector lowered = CVector::Zero(s.dim());
    for (int m = 1; m <= s.n_max(); ++m) {
      lowered(HybridState::index(m - 1, Level::g)) = s.amplitude(m, Level::g);
    }
    const double w = lowered.norm();
    if (w > 0.0) out.push_back({c.probability * w * w, HybridState(s.n_max(), lowered / w)});
  }
  MixedState result(std::move(out));
  result.compact();
  return result;
}

CoolingRun run_cooling(const MixedState& initial, const CoolingPlan& plan, const DriveSpec& drive) {
  if (plan.max_cycles < 0) throw std::invalid_argument("run_cooling: max_cycles must be >= 0");
  if (plan.schedule == CoolingSchedule::fixed && plan.target_m < 1) {
    throw std::invalid_argument("run_cooling: target_m must be >= 1");
  }
  if (plan.schedule == CoolingSchedule::sweep && plan.sweep_top < 1) {
    throw std::invalid_argument("run_cooling: sweep_top must be >= 1");
  }
  CoolingRun run{initial, {}, false, true, {}};
  double elapsed = 0.0;
  double ground = initial.population(0, Level::g);
  run.history.push_back({0, 0, 0.0, ground, initial.mean_phonon()});
  run.reached = ground >= plan.target_ground;

  for (int cycle = 1; cycle <= plan.max_cycles && !run.reached; ++cycle) {
    CoolingMode mode = IdealizedCooling{};
    int target = 0;
    if (plan.schedule == CoolingSchedule::fixed) {
      target = plan.target_m;
    } else if (plan.schedule == CoolingSchedule::sweep) {
      target = plan.sweep_top - (cycle - 1) % plan.sweep_top;
    }
    if (target > 0) {
      mode = PulsedCooling{target};
      const double t = pulse_duration(target, drive);
      run.sequence.add_pulse(Sideband::red, t, drive.phase, drive.omega, drive.eta);
      elapsed += t;
    }
    run.sequence.add_reset();
    elapsed += reset_duration;

    run.final_state = cooling_cycle(run.final_state, mode, drive);
    const double next = run.final_state.population(0, Level::g);
    if (next < ground - 1e-14) run.monotone = false;
    ground = next;
    run.history.push_back({cycle, target, elapsed, ground, run.final_state.mean_phonon()});
    run.reached = ground >= plan.target_ground;
  }
  return run;
}

}  // namespace hejc
