#pragma once

// States of the coupled system: Fock-truncated x-oscillator times the two
// lowest vertical levels. Basis index 2m + s, with s = 0 for |g> and 1 for |e>.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace hejc {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

enum class Level : int { g = 0, e = 1 };

/// Population allowed in the two highest Fock levels after an evolution.
inline constexpr double guard_tolerance = 1e-6;

class HybridState {
 public:
  /// |0>|g> in a space truncated at n_max.
  explicit HybridState(int n_max);
  /// Throws std::invalid_argument when the vector length is not 2 (n_max + 1).
  HybridState(int n_max, CVector amplitudes);

  static HybridState fock(int n_max, int m, Level level);

  static Eigen::Index index(int m, Level level) {
    return 2 * static_cast<Eigen::Index>(m) + static_cast<int>(level);
  }

  int n_max() const { return n_max_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const CVector& amplitudes() const { return amplitudes_; }
  CVector& amplitudes() { return amplitudes_; }
  cplx amplitude(int m, Level level) const { return amplitudes_(index(m, level)); }

  double norm() const { return amplitudes_.norm(); }
  void normalize();
  double population(Level level) const;
  double population(int m, Level level) const { return std::norm(amplitude(m, level)); }
  double fock_population(int m) const;
  double mean_phonon() const;
  /// Total population in Fock levels n_max - 1 and n_max.
  double guard_population() const;

 private:
  int n_max_;
  CVector amplitudes_;
};

/// Throws TruncationOverflow when guard_population() >= guard_tolerance.
void check_truncation(const HybridState& state, const char* where);

/// |<a|b>|^2.
double fidelity(const HybridState& a, const HybridState& b);

/// Classical mixture of pure states; probabilities sum to 1 within 1e-9.
class MixedState {
 public:
  struct Component {
    double probability;
    HybridState state;
  };

  MixedState() = default;
  /// Throws std::invalid_argument on negative weights, inconsistent truncation,
  /// or a total probability off by more than 1e-9.
  explicit MixedState(std::vector<Component> components);

  static MixedState pure(const HybridState& s) { return MixedState({{1.0, s}}); }

  const std::vector<Component>& components() const { return components_; }
  int n_max() const;
  double total_probability() const;
  double population(int m, Level level) const;
  double population(Level level) const;
  double mean_phonon() const;
  /// Density matrix sum_i p_i |psi_i><psi_i|; intended for small test spaces.
  CMatrix density_matrix() const;

  /// Merges components that are the same ray (fidelity > 1 - 1e-12) and drops
  /// zero-weight components. Order of first appearance is kept.
  void compact();

 private:
  std::vector<Component> components_;
};

}  // namespace hejc
