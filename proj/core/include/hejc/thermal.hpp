#pragma once

#include <vector>

#include "hejc/constants.hpp"
#include "hejc/state.hpp"

namespace hejc {

/// Bose-Einstein occupation of the in-plane oscillator,
///   P_m = <m>^m / (1 + <m>)^{m+1},  <m> = 1 / (exp(hbar nu / k_B T) - 1).
struct ThermalDistribution {
  double nu = 0.0;           ///< rad/s; 0 when built from a mean occupation
  double temperature = 0.0;  ///< K; 0 when built from a mean occupation
  double mean_m = 0.0;
  std::vector<double> probs;  ///< m = 0..n_max
  double tail_mass = 0.0;     ///< sum over m > n_max, closed form
  /// 1 - P_0 in closed form; resolves values far below double epsilon.
  double ground_deficit = 0.0;
  /// Geometric ratio P_{m+1}/P_m = <m>/(1 + <m>).
  double ratio = 0.0;

  int n_max() const { return static_cast<int>(probs.size()) - 1; }
};

/// Throws std::invalid_argument unless nu > 0, T > 0 and n_max >= 0.
ThermalDistribution thermal_distribution(double nu, double temperature, int n_max,
                                         const Constants& k = constants());

/// Same law parameterized by the mean occupation (mean_m >= 0).
ThermalDistribution thermal_from_mean(double mean_m, int n_max);

/// Diagonal mixture sum_m P_m |m>|level>, renormalized over retained levels.
MixedState thermal_mixture(const ThermalDistribution& dist, Level level = Level::g);

}  // namespace hejc
