#pragma once

// Physical constants and the effective hydrogen scale of an electron bound
// above liquid helium by its dielectric image charge.
//
// Unit convention used throughout the library: SI, with every frequency
// stored as an ANGULAR frequency in rad/s. Quoted "GHz" figures for this
// system (omega_0 ~ 1133 GHz, nu ~ 59 GHz) are only mutually consistent when
// read as 10^9 rad/s, e.g. hbar*nu/k_B = 0.45 K needs nu = 5.9e10 rad/s.

#include <numbers>

namespace hejc {

namespace codata {
inline constexpr double elementary_charge = 1.602176634e-19;    // C
inline constexpr double electron_mass = 9.109383702e-31;        // kg
inline constexpr double hbar = 1.054571818e-34;                 // J s
inline constexpr double boltzmann = 1.380649e-23;               // J/K
inline constexpr double speed_of_light = 299792458.0;           // m/s
inline constexpr double vacuum_permittivity = 8.854187813e-12;  // F/m
}  // namespace codata

/// Static dielectric constant of liquid helium-4.
inline constexpr double helium4_dielectric = 1.0568;

/// Image-charge factor (eps - 1) / (4 (eps + 1)). Throws std::invalid_argument
/// for eps <= 1.
double lambda_factor(double epsilon);

/// Immutable bundle of constants shared by every module.
struct Constants {
  double e;         ///< elementary charge, C
  double m_e;       ///< electron mass, kg
  double hbar;      ///< J s
  double k_B;       ///< J/K
  double c;         ///< m/s
  double epsilon0;  ///< F/m
  double coulomb;   ///< 1/(4 pi epsilon0), the SI Coulomb factor
  double epsilon;   ///< dielectric constant of the liquid
  double Lambda;    ///< image-charge factor
  double r_B;       ///< effective Bohr radius hbar^2/(m_e e^2 Lambda coulomb), m
  double R_He;      ///< effective Rydberg energy, J; E_n = -R_He/n^2

  static Constants make(double epsilon = helium4_dielectric);
};

/// The process-wide helium-4 instance.
const Constants& constants();

struct HydrogenScale {
  double rydberg;      ///< J
  double bohr_radius;  ///< m
};

/// (R_He, r_B) with R_He = hbar^2 / (2 m_e r_B^2).
HydrogenScale effective_rydberg_and_bohr(const Constants& k = constants());

/// The same energy scale from the charge form Lambda^2 e^4 m_e / (2 hbar^2)
/// (with the SI Coulomb factor squared). Used as a unit cross-check.
double rydberg_charge_form(const Constants& k = constants());

inline double to_electronvolt(double joule) { return joule / codata::elementary_charge; }

}  // namespace hejc
