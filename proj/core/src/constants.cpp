#include "hejc/constants.hpp"

#include <stdexcept>

namespace hejc {

double lambda_factor(double epsilon) {
  if (!(epsilon > 1.0)) {
    throw std::invalid_argument("lambda_factor: dielectric constant must exceed 1");
  }
  return (epsilon - 1.0) / (4.0 * (epsilon + 1.0));
}

Constants Constants::make(double epsilon) {
  Constants k{};
  k.e = codata::elementary_charge;
  k.m_e = codata::electron_mass;
  k.hbar = codata::hbar;
  k.k_B = codata::boltzmann;
  k.c = codata::speed_of_light;
  k.epsilon0 = codata::vacuum_permittivity;
  k.coulomb = 1.0 / (4.0 * std::numbers::pi * k.epsilon0);
  k.epsilon = epsilon;
  k.Lambda = lambda_factor(epsilon);
  k.r_B = k.hbar * k.hbar / (k.m_e * k.e * k.e * k.Lambda * k.coulomb);
  k.R_He = k.hbar * k.hbar / (2.0 * k.m_e * k.r_B * k.r_B);
  return k;
}

const Constants& constants() {
  static const Constants instance = Constants::make();
  return instance;
}

HydrogenScale effective_rydberg_and_bohr(const Constants& k) { return {k.R_He, k.r_B}; }

double rydberg_charge_form(const Constants& k) {
  const double q2 = k.coulomb * k.e * k.e;
  return k.Lambda * k.Lambda * q2 * q2 * k.m_e / (2.0 * k.hbar * k.hbar);
}

}  // namespace hejc
