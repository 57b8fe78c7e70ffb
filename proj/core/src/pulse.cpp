#include "hejc/pulse.hpp"

#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hejc/analytic.hpp"

namespace hejc {

Sideband sideband_from_index(int K) {
  if (K < -1 || K > 1) {
    throw std::invalid_argument("sideband index must be -1, 0 or +1, got " + std::to_string(K));
  }
  return static_cast<Sideband>(K);
}

Sideband parse_sideband(std::string_view text) {
  if (text == "red" || text == "-1") return Sideband::red;
  if (text == "carrier" || text == "0") return Sideband::carrier;
  if (text == "blue" || text == "1" || text == "+1") return Sideband::blue;
  throw std::invalid_argument("unknown sideband '" + std::string(text) + "'");
}

std::string_view to_string(Sideband s) {
  switch (s) {
    case Sideband::red: return "red";
    case Sideband::carrier: return "carrier";
    case Sideband::blue: return "blue";
  }
  return "?";
}

void PulseSequence::add_pulse(Sideband sideband, double duration, double phase, double rabi,
                              double eta) {
  if (!(duration > 0.0)) throw std::invalid_argument("PulseSequence: duration must be > 0");
  steps_.push_back({PulseStep::Kind::drive, sideband, duration, phase, rabi, eta});
}

void PulseSequence::add_reset(double duration) {
  if (!(duration > 0.0)) throw std::invalid_argument("PulseSequence: duration must be > 0");
  PulseStep step;
  step.kind = PulseStep::Kind::reset;
  step.duration = duration;
  steps_.push_back(step);
}

double PulseSequence::total_duration() const {
  double total = 0.0;
  for (const auto& s : steps_) total += s.duration;
  return total;
}

double pi_pulse_duration(double rabi, double eta, int m, Sideband sideband) {
  return std::numbers::pi / rabi_mk(m, std::abs(index_of(sideband)), rabi, eta);
}

}  // namespace hejc
