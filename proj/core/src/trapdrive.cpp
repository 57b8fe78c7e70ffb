#include "hejc/trapdrive.hpp"

#include <cmath>
#include <stdexcept>

namespace hejc {

double field_from_charge(double charge, double depth, const Constants& k) {
  return k.coulomb * charge / (depth * depth);
}

void TrapConfig::validate() const {
  if (!(e_perp > 0.0) || !std::isfinite(e_perp)) {
    throw std::invalid_argument("TrapConfig: E_perp must be > 0");
  }
  if (!(depth > 0.0) || !std::isfinite(depth)) {
    throw std::invalid_argument("TrapConfig: electrode depth must be > 0");
  }
  if (!(temperature >= 0.0)) throw std::invalid_argument("TrapConfig: temperature must be >= 0");
}

TrapConfig TrapConfig::from_field(double e_perp, double depth, double temperature) {
  TrapConfig cfg{e_perp, depth, temperature, std::nullopt};
  cfg.validate();
  return cfg;
}

TrapConfig TrapConfig::from_charge(double charge, double depth, double temperature) {
  if (!(depth > 0.0)) throw std::invalid_argument("TrapConfig: electrode depth must be > 0");
  TrapConfig cfg{field_from_charge(charge, depth), depth, temperature, charge};
  cfg.validate();
  return cfg;
}

TrapConfig TrapConfig::from_field_and_charge(double e_perp, double charge, double depth,
                                             double temperature) {
  TrapConfig cfg = from_charge(charge, depth, temperature);
  if (std::abs(cfg.e_perp - e_perp) > 0.01 * std::abs(e_perp)) {
    throw std::invalid_argument("TrapConfig: E_perp and Q/h^2 disagree by more than 1%");
  }
  cfg.e_perp = e_perp;
  return cfg;
}

double trap_frequency(const TrapConfig& cfg, const Constants& k) {
  cfg.validate();
  return std::sqrt(k.e * cfg.e_perp / (k.m_e * cfg.depth));
}

double vibrational_temperature(double nu, const Constants& k) { return k.hbar * nu / k.k_B; }

LambDicke lamb_dicke(double omega_0, double nu, int K, const Constants& k) {
  if (!(omega_0 > 0.0) || !(nu > 0.0)) {
    throw std::invalid_argument("lamb_dicke: frequencies must be > 0");
  }
  const double omega_l = omega_0 + K * nu;
  if (!(omega_l > 0.0)) throw std::invalid_argument("lamb_dicke: omega_0 + K nu must be > 0");
  const double eta = omega_l * std::sqrt(k.hbar / (2.0 * k.m_e * nu)) / k.c;
  return {eta, eta < ld_threshold};
}

RabiParameters rabi_parameters(const HydrogenSolution& sol, double e_z, const Constants& k) {
  if (sol.level_count() < 2) throw std::invalid_argument("rabi_parameters: need levels 1 and 2");
  if (!(e_z > 0.0)) throw std::invalid_argument("rabi_parameters: E_z must be > 0");
  const double z_ge = sol.z_element(1, 2);
  const double dz = sol.z_element(2, 2) - sol.z_element(1, 1);
  return {std::abs(z_ge) * k.e * e_z / (2.0 * k.hbar), dz * k.e * e_z / (4.0 * k.hbar)};
}

DriveSpec DriveSpec::physical(const HydrogenSolution& sol, const TrapConfig& trap,
                              Sideband sideband, double e_z, double phase, const Constants& k) {
  DriveSpec d;
  d.sideband = sideband;
  d.e_z = e_z;
  d.phase = phase;
  d.nu = trap_frequency(trap, k);
  d.omega_0 = transition(sol, 1, 2, k).omega;
  d.omega_l = d.omega_0 + index_of(sideband) * d.nu;
  const auto ld = lamb_dicke(d.omega_0, d.nu, index_of(sideband), k);
  d.eta = ld.eta;
  d.ld_valid = ld.ld_valid;
  const auto rabi = rabi_parameters(sol, e_z, k);
  d.omega = rabi.omega;
  d.omega_tilde = rabi.omega_tilde;
  return d;
}

DriveSpec DriveSpec::scaled(double omega_0, double nu, double eta, double omega,
                            double omega_tilde, Sideband sideband, double phase) {
  if (!(omega_0 > 0.0) || !(nu > 0.0) || !(eta >= 0.0) || !(omega > 0.0)) {
    throw std::invalid_argument("DriveSpec::scaled: frequencies must be > 0 and eta >= 0");
  }
  DriveSpec d;
  d.sideband = sideband;
  d.phase = phase;
  d.nu = nu;
  d.omega_0 = omega_0;
  d.omega_l = omega_0 + index_of(sideband) * nu;
  if (!(d.omega_l > 0.0)) throw std::invalid_argument("DriveSpec::scaled: omega_l must be > 0");
  d.eta = eta;
  d.ld_valid = eta < ld_threshold;
  d.omega = omega;
  d.omega_tilde = omega_tilde;
  return d;
}

DriveSpec DriveSpec::retuned(Sideband s, const Constants& k) const {
  DriveSpec d = *this;
  d.sideband = s;
  d.omega_l = omega_0 + index_of(s) * nu;
  if (e_z > 0.0) {
    const auto ld = lamb_dicke(omega_0, nu, index_of(s), k);
    d.eta = ld.eta;
    d.ld_valid = ld.ld_valid;
  }
  return d;
}

BudgetReport coherence_budget(const PulseSequence& seq, double budget) {
  if (!(budget > 0.0)) throw std::invalid_argument("coherence_budget: budget must be > 0");
  BudgetReport r;
  r.budget = budget;
  for (const auto& step : seq.steps()) {
    r.total += step.duration;
    r.fractions.push_back(step.duration / budget);
  }
  r.feasible = r.total < budget;
  return r;
}

}  // namespace hejc
