#pragma once

// Vertical motion of the surface electron: the 1D hydrogen atom formed by the
// image potential -Lambda e^2/z above a hard wall at z = 0, optionally tilted
// by the pressing field E_perp (the "Stark-shifted" problem).

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hejc/constants.hpp"

namespace hejc {

/// Uniform interior grid z_i = i * spacing, i = 1..n_points, with Dirichlet
/// walls at z = 0 and z = z_max = (n_points + 1) * spacing.
struct Grid {
  double z_max = 0.0;
  std::size_t n_points = 0;

  double spacing() const { return z_max / static_cast<double>(n_points + 1); }
  double z(std::size_t i) const { return static_cast<double>(i + 1) * spacing(); }

  /// Grid of the given extent whose spacing is at most `spacing`.
  static Grid with_spacing(double z_max, double spacing);
  /// 60 r_B at spacing r_B/200.
  static Grid defaults(const Constants& k = constants());
};

struct StarkOptions {
  /// Grow z_max (at fixed spacing) until the highest retained state is
  /// negligible near the outer wall.
  bool adapt_extent = true;
  double tail_tolerance = 1e-10;
  double max_extent_bohr = 3000.0;
  /// Re-solve on a grid with twice the points and record the eigenvalue change.
  bool check_refinement = true;
  double refinement_tolerance = 1e-5;
};

struct HydrogenSolution {
  double e_perp = 0.0;  ///< V/m
  Grid grid;
  std::vector<double> levels;  ///< J, index 0 holds n = 1
  /// Column j holds psi_{j+1} sampled on the grid, in m^{-1/2}, normalized so
  /// that spacing * sum psi^2 = 1 and with positive slope at z = 0+.
  Eigen::MatrixXd states;
  /// <i|z|j> in metres, 0-based indices.
  Eigen::MatrixXd z_elements;
  /// Largest relative eigenvalue change under grid doubling, NaN if unchecked.
  double refinement_change = 0.0;
  std::vector<std::string> warnings;

  int level_count() const { return static_cast<int>(levels.size()); }
  /// Energy of level n (1-based).
  double energy(int n) const;
  /// <i|z|j> for 1-based level indices.
  double z_element(int i, int j) const;
};

/// Analytic unperturbed eigenfunction psi_n(z) (n >= 1), in m^{-1/2}:
///   2 n^{-5/2} r_B^{-3/2} z exp(-z/(n r_B)) L_{n-1}^{(1)}(2z/(n r_B)).
/// Throws std::invalid_argument for z <= 0 or n < 1.
double psi_unperturbed(int n, double z, const Constants& k = constants());

/// Lowest `n_levels` eigenpairs of
///   -(hbar^2/2m_e) d^2/dz^2 - Lambda e^2 coulomb / z + e E_perp z
/// by second-order finite differences. Throws std::invalid_argument on bad
/// inputs and SolverError when the eigensolver fails. A grid that does not
/// pass the refinement check yields an entry in `warnings`.
HydrogenSolution stark_solve(double e_perp, int n_levels = 5, const Grid& grid = Grid::defaults(),
                             const StarkOptions& options = {}, const Constants& k = constants());

struct Transition {
  double omega;  ///< (E_j - E_i)/hbar, rad/s
  double z_ij;   ///< <i|z|j>, m
};

/// 1-based levels; throws std::out_of_range.
Transition transition(const HydrogenSolution& sol, int i, int j,
                      const Constants& k = constants());

/// CSV dump: a comment header with E_perp and level energies in eV, then
/// columns z_m, psi_1, psi_2, ... Every `stride`-th grid point is written.
void write_eigenfunctions_csv(std::ostream& os, const HydrogenSolution& sol,
                              std::size_t stride = 1);

}  // namespace hejc
