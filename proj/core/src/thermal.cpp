#include "hejc/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hejc {

namespace {

// Distribution of the geometric law with ratio q = exp(-x), x = hbar nu / k_B T.
ThermalDistribution from_exponent(double x, int n_max) {
  ThermalDistribution d;
  d.ratio = std::exp(-x);
  d.ground_deficit = d.ratio;
  d.mean_m = 1.0 / std::expm1(x);
  const double p0 = -std::expm1(-x);
  d.probs.resize(static_cast<std::size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    d.probs[static_cast<std::size_t>(m)] = m == 0 ? p0 : p0 * std::exp(-m * x);
  }
  d.tail_mass = std::exp(-(n_max + 1.0) * x);
  return d;
}

}  // namespace

ThermalDistribution thermal_distribution(double nu, double temperature, int n_max,
                                         const Constants& k) {
  if (!(nu > 0.0)) throw std::invalid_argument("thermal_distribution: nu must be > 0");
  if (!(temperature > 0.0)) throw std::invalid_argument("thermal_distribution: T must be > 0");
  if (n_max < 0) throw std::invalid_argument("thermal_distribution: n_max must be >= 0");
  ThermalDistribution d = from_exponent(k.hbar * nu / (k.k_B * temperature), n_max);
  d.nu = nu;
  d.temperature = temperature;
  return d;
}

ThermalDistribution thermal_from_mean(double mean_m, int n_max) {
  if (!(mean_m >= 0.0)) throw std::invalid_argument("thermal_from_mean: mean must be >= 0");
  if (n_max < 0) throw std::invalid_argument("thermal_from_mean: n_max must be >= 0");
  const double x = mean_m == 0.0 ? INFINITY : std::log1p(1.0 / mean_m);
  ThermalDistribution d = from_exponent(x, n_max);
  d.mean_m = mean_m;
  return d;
}

MixedState thermal_mixture(const ThermalDistribution& dist, Level level) {
  const int n_max = std::max(dist.n_max(), 1);
  const double kept = 1.0 - dist.tail_mass;
  std::vector<MixedState::Component> comps;
  for (int m = 0; m <= dist.n_max(); ++m) {
    const double p = dist.probs[static_cast<std::size_t>(m)] / kept;
    if (p > 0.0) comps.push_back({p, HybridState::fock(n_max, m, level)});
  }
  return MixedState(std::move(comps));
}

}  // namespace hejc
