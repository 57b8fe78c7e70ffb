#pragma once

#include "hejc/sideband.hpp"
#include "hejc/state.hpp"
#include "hejc/trapdrive.hpp"

namespace hejc {

/// Effective rotating-wave Hamiltonian in joules on the truncated space:
///   K =  0:  hbar Omega e^{i phi} sigma+ + h.c.
///   K = -1:  i eta hbar Omega e^{i phi} sigma+ a + h.c.        (JCM)
///   K = +1:  i eta hbar Omega e^{i phi} sigma+ a^dagger + h.c.  (anti-JCM)
/// Throws std::invalid_argument for n_max < 1.
CMatrix effective_hamiltonian(Sideband sideband, double omega, double eta, double phase, int n_max,
                              const Constants& k = constants());

/// a^dagger a + sign * sigma+ sigma-  (sign = +1: JCM invariant, -1: anti-JCM).
CMatrix excitation_operator(int n_max, int sign);

/// How the recoil factor exp(i eta (a + a^dagger)) enters the drive.
enum class CouplingModel {
  full,        ///< exact exponential (interaction picture of the driven Hamiltonian)
  lamb_dicke,  ///< first order, 1 + i eta (a + a^dagger)
};

/// Time-dependent Hamiltonian of the laser-driven electron, divided by hbar
/// (rad/s), in two frames:
///  - lab frame: H0 + (Omega_t sigma_z + Omega sigma_x)
///               (e^{i phi - i omega_l t} D + h.c.), periodic in 2 pi/omega_l;
///  - interaction picture w.r.t. H0 = nu (a^dagger a + 1/2) + omega_0 sigma_z / 2,
///    where a -> a e^{-i nu t}, sigma+ -> sigma+ e^{i omega_0 t}.
/// D is exp(i eta (a + a^dagger)) or its first-order expansion.
class DrivenHamiltonian {
 public:
  DrivenHamiltonian(const DriveSpec& drive, CouplingModel model, int n_max);

  int n_max() const { return n_max_; }
  Eigen::Index dim() const { return 2 * (static_cast<Eigen::Index>(n_max_) + 1); }
  const DriveSpec& drive() const { return drive_; }

  /// H_I(t)/hbar written into `out` (resized as needed).
  void interaction(double t, CMatrix& out) const;
  /// H(t)/hbar in the lab frame written into `out`.
  void lab(double t, CMatrix& out) const;
  /// Diagonal of H0/hbar.
  const Eigen::VectorXd& free_energies() const { return free_; }

  /// Highest frequency in H_I(t): 2 omega_0 + 2 nu.
  double max_frequency() const { return 2.0 * drive_.omega_0 + 2.0 * drive_.nu; }
  /// Lab-frame period 2 pi / omega_l.
  double period() const;

 private:
  DriveSpec drive_;
  int n_max_;
  CMatrix recoil_;  // D, (n_max+1)^2
  Eigen::VectorXd free_;
};

}  // namespace hejc
