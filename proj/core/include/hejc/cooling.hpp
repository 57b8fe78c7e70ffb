#pragma once

// Resolved-sideband cooling: a red-sideband transfer |m,g> -> |m-1,e>
// followed by a dissipative reset |e> -> |a> -> |g> through the third
// vertical level, removing one vibrational quantum per successful cycle.

#include <variant>
#include <vector>

#include "hejc/pulse.hpp"
#include "hejc/state.hpp"
#include "hejc/trapdrive.hpp"

namespace hejc {

/// Perfect transfer of every |m,g> (m >= 1) to |m-1,g> in one cycle.
struct IdealizedCooling {};

/// Red-sideband pulse of length pi / (2 Omega_{target_m - 1, 1}) applied to
/// every component, then the reset.
struct PulsedCooling {
  int target_m = 1;
};

using CoolingMode = std::variant<IdealizedCooling, PulsedCooling>;

/// Incoherent, instantaneous reset: |m,e> -> |m,g>, |m,g> unchanged.
/// Each pure component splits into its g and e parts.
MixedState reset_to_ground(const MixedState& mix);

/// One cooling cycle. Throws std::invalid_argument for target_m < 1.
MixedState cooling_cycle(const MixedState& mix, const CoolingMode& mode, const DriveSpec& drive);

enum class CoolingSchedule {
  idealized,  ///< IdealizedCooling every cycle
  fixed,      ///< PulsedCooling with a constant target_m
  sweep,      ///< PulsedCooling with target_m = top, top-1, ..., 1, repeated
};

struct CoolingPlan {
  CoolingSchedule schedule = CoolingSchedule::sweep;
  int target_m = 1;    ///< fixed schedule
  int sweep_top = 10;  ///< sweep schedule
  int max_cycles = 200;
  double target_ground = 0.99;  ///< stop once P(|0,g>) reaches this
};

struct CoolingRecord {
  int cycle = 0;
  int target_m = 0;       ///< 0 for idealized cycles and the initial record
  double elapsed = 0.0;   ///< s, pulses plus resets so far
  double ground_population = 0.0;
  double mean_m = 0.0;
};

struct CoolingRun {
  MixedState final_state;
  std::vector<CoolingRecord> history;  ///< history[0] is the initial state
  bool reached = false;
  bool monotone = true;  ///< ground population never decreased
  PulseSequence sequence;
  int cycles() const { return static_cast<int>(history.size()) - 1; }
};

CoolingRun run_cooling(const MixedState& initial, const CoolingPlan& plan, const DriveSpec& drive);

}  // namespace hejc
