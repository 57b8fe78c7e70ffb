#pragma once

#include <vector>

#include "hejc/sideband.hpp"

namespace hejc {

/// Time charged against the coherence budget for one |e> -> |a> -> |g> reset.
inline constexpr double reset_duration = 4e-6;

struct PulseStep {
  enum class Kind { drive, reset };
  Kind kind = Kind::drive;
  Sideband sideband = Sideband::carrier;
  double duration = 0.0;  ///< s
  double phase = 0.0;     ///< rad
  double rabi = 0.0;      ///< carrier Rabi frequency Omega, rad/s
  double eta = 0.0;
};

/// Ordered drive pulses interleaved with dissipative reset markers.
class PulseSequence {
 public:
  /// Throws std::invalid_argument unless duration > 0.
  void add_pulse(Sideband sideband, double duration, double phase, double rabi, double eta);
  void add_reset(double duration = reset_duration);

  const std::vector<PulseStep>& steps() const { return steps_; }
  double total_duration() const;
  bool empty() const { return steps_.empty(); }

 private:
  std::vector<PulseStep> steps_;
};

/// pi / Omega_{m,k}, the pulse duration quoted for sideband order k = |K|.
double pi_pulse_duration(double rabi, double eta, int m, Sideband sideband);

}  // namespace hejc
