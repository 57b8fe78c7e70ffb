#pragma once

// Trap and drive parameters: in-plane trap frequency, Lamb-Dicke parameter,
// carrier and diagonal Rabi frequencies, and the coherence-budget check.

#include <optional>
#include <vector>

#include "hejc/constants.hpp"
#include "hejc/hydrogen1d.hpp"
#include "hejc/pulse.hpp"
#include "hejc/sideband.hpp"

namespace hejc {

/// Electrode configuration. The pressing field may be given directly or via
/// the electrode charge Q at depth h (E_perp = Q / (4 pi eps0 h^2) in SI).
struct TrapConfig {
  double e_perp = 0.0;       ///< V/m
  double depth = 0.0;        ///< electrode depth h, m
  double temperature = 0.0;  ///< bath temperature, K
  std::optional<double> charge;  ///< C

  static TrapConfig from_field(double e_perp, double depth, double temperature = 0.0);
  static TrapConfig from_charge(double charge, double depth, double temperature = 0.0);
  /// Both parameterizations; rejected unless they agree to 1%.
  static TrapConfig from_field_and_charge(double e_perp, double charge, double depth,
                                          double temperature = 0.0);

  /// Throws std::invalid_argument when a field is non-positive.
  void validate() const;
};

double field_from_charge(double charge, double depth, const Constants& k = constants());

/// sqrt(e E_perp / (m_e h)), rad/s.
double trap_frequency(const TrapConfig& cfg, const Constants& k = constants());

/// hbar nu / k_B, K.
double vibrational_temperature(double nu, const Constants& k = constants());

inline constexpr double ld_threshold = 0.1;

struct LambDicke {
  double eta = 0.0;
  bool ld_valid = false;  ///< eta < ld_threshold
};

/// eta = (omega_0 + K nu) sqrt(hbar / (2 m_e nu)) / c.
LambDicke lamb_dicke(double omega_0, double nu, int K, const Constants& k = constants());

struct RabiParameters {
  double omega = 0.0;        ///< |<g|z|e>| e E_z / (2 hbar)
  double omega_tilde = 0.0;  ///< (<e|z|e> - <g|z|g>) e E_z / (4 hbar)
};

RabiParameters rabi_parameters(const HydrogenSolution& sol, double e_z,
                               const Constants& k = constants());

/// Everything the dynamics needs about one drive configuration.
struct DriveSpec {
  Sideband sideband = Sideband::carrier;
  double e_z = 0.0;          ///< V/m, 0 for scaled scenarios
  double phase = 0.0;        ///< phi_l, rad
  double omega_l = 0.0;      ///< rad/s, always omega_0 + K nu
  double eta = 0.0;
  double omega = 0.0;        ///< carrier Rabi frequency, rad/s
  double omega_tilde = 0.0;  ///< rad/s
  double nu = 0.0;           ///< rad/s
  double omega_0 = 0.0;      ///< rad/s
  bool ld_valid = false;

  /// Physical drive: omega_0 from levels 1-2 of `sol`, nu from `trap`, eta derived.
  static DriveSpec physical(const HydrogenSolution& sol, const TrapConfig& trap, Sideband sideband,
                            double e_z, double phase, const Constants& k = constants());
  /// Drive with explicitly chosen frequencies and eta (no photon-recoil relation).
  static DriveSpec scaled(double omega_0, double nu, double eta, double omega, double omega_tilde,
                          Sideband sideband, double phase = 0.0);

  /// Same drive retuned to another sideband (omega_l and, for physical drives, eta updated).
  DriveSpec retuned(Sideband s, const Constants& k = constants()) const;
};

inline constexpr double default_coherence_budget = 1e-4;

struct BudgetReport {
  double total = 0.0;   ///< s
  double budget = 0.0;  ///< s
  bool feasible = false;
  std::vector<double> fractions;  ///< per step, duration / budget
};

BudgetReport coherence_budget(const PulseSequence& seq, double budget = default_coherence_budget);

}  // namespace hejc
