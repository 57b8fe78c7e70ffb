#include "hejc/hydrogen1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <lapacke.h>

#include "hejc/error.hpp"
#include "hejc/format.hpp"
#include "hejc/laguerre.hpp"

namespace hejc {

Grid Grid::with_spacing(double z_max, double spacing) {
  if (!(z_max > 0.0) || !(spacing > 0.0) || spacing >= z_max) {
    throw std::invalid_argument("Grid: need 0 < spacing < z_max");
  }
  const auto cells = static_cast<std::size_t>(std::ceil(z_max / spacing - 1e-9));
  return Grid{z_max, cells - 1};
}

Grid Grid::defaults(const Constants& k) { return with_spacing(60.0 * k.r_B, k.r_B / 200.0); }

double HydrogenSolution::energy(int n) const {
  if (n < 1 || n > level_count()) throw std::out_of_range("HydrogenSolution: level out of range");
  return levels[static_cast<std::size_t>(n - 1)];
}

double HydrogenSolution::z_element(int i, int j) const {
  if (i < 1 || j < 1 || i > level_count() || j > level_count()) {
    throw std::out_of_range("HydrogenSolution: level out of range");
  }
  return z_elements(i - 1, j - 1);
}

double psi_unperturbed(int n, double z, const Constants& k) {
  if (n < 1) throw std::invalid_argument("psi_unperturbed: n must be >= 1");
  if (!(z > 0.0)) throw std::invalid_argument("psi_unperturbed: z must be > 0 (hard wall)");
  const double nn = static_cast<double>(n);
  const double x = z / (nn * k.r_B);
  return 2.0 * std::pow(nn, -2.5) * std::pow(k.r_B, -1.5) * z * std::exp(-x) *
         laguerre(n - 1, 1, 2.0 * x);
}

namespace {

struct Eigenpairs {
  std::vector<double> values;  // units of R_He
  Eigen::MatrixXd vectors;     // unit 2-norm columns
};

// Dimensionless problem in u = z/r_B, energies in R_He:
//   -d^2/du^2 - 2/u + field * u,  field = e E_perp r_B / R_He.
Eigenpairs solve_tridiagonal(double field, const Grid& grid, int n_levels, double r_B) {
  const auto n = static_cast<lapack_int>(grid.n_points);
  const double hu = grid.spacing() / r_B;
  const double kinetic = 1.0 / (hu * hu);

  std::vector<double> diag(grid.n_points);
  std::vector<double> off(grid.n_points > 1 ? grid.n_points - 1 : 1, -kinetic);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double u = static_cast<double>(i + 1) * hu;
    diag[i] = 2.0 * kinetic - 2.0 / u + field * u;
  }

  Eigenpairs out;
  out.values.resize(static_cast<std::size_t>(n_levels));
  out.vectors.resize(n, n_levels);
  std::vector<lapack_int> ifail(grid.n_points);
  lapack_int found = 0;
  const double abstol = 2.0 * LAPACKE_dlamch('S');
  const lapack_int info =
      LAPACKE_dstevx(LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), off.data(), 0.0, 0.0, 1,
                     n_levels, abstol, &found, out.values.data(), out.vectors.data(), n,
                     ifail.data());
  if (info != 0 || found != n_levels) {
    throw SolverError("stark_solve: tridiagonal eigensolver did not converge (info=" +
                      std::to_string(info) + ")");
  }
  for (int j = 0; j < n_levels; ++j) {
    auto col = out.vectors.col(j);
    Eigen::Index first = 0;
    while (first < col.size() - 1 && col(first) == 0.0) ++first;
    if (col(first) < 0.0) col = -col;
  }
  return out;
}

double tail_fraction(const Eigen::VectorXd& v) {
  const Eigen::Index start = static_cast<Eigen::Index>(0.9 * static_cast<double>(v.size()));
  const double peak = v.cwiseAbs().maxCoeff();
  const double tail = v.segment(start, v.size() - start).cwiseAbs().maxCoeff();
  return peak > 0.0 ? tail / peak : 0.0;
}

}  // namespace

HydrogenSolution stark_solve(double e_perp, int n_levels, const Grid& grid,
                             const StarkOptions& options, const Constants& k) {
  if (!(e_perp >= 0.0) || !std::isfinite(e_perp)) {
    throw std::invalid_argument("stark_solve: E_perp must be finite and >= 0");
  }
  if (n_levels < 2) throw std::invalid_argument("stark_solve: need at least 2 levels");
  if (grid.n_points < static_cast<std::size_t>(4 * n_levels)) {
    throw std::invalid_argument("stark_solve: grid has too few points");
  }
  if (grid.spacing() > k.r_B / 50.0) {
    throw std::invalid_argument("stark_solve: grid spacing must resolve r_B (<= r_B/50)");
  }

  const double field = k.e * e_perp * k.r_B / k.R_He;
  HydrogenSolution sol;
  sol.e_perp = e_perp;
  sol.grid = grid;

  Eigenpairs pairs = solve_tridiagonal(field, grid, n_levels, k.r_B);
  if (options.adapt_extent) {
    const double spacing = grid.spacing();
    while (tail_fraction(pairs.vectors.col(n_levels - 1)) > options.tail_tolerance) {
      const double next = sol.grid.z_max * 1.5;
      if (next > options.max_extent_bohr * k.r_B) {
        sol.warnings.push_back("stark_solve: level " + std::to_string(n_levels) +
                               " not contained at the maximum extent " +
                               format_sci(sol.grid.z_max) + " m");
        break;
      }
      sol.grid = Grid::with_spacing(next, spacing);
      pairs = solve_tridiagonal(field, sol.grid, n_levels, k.r_B);
    }
  }

  sol.levels.resize(static_cast<std::size_t>(n_levels));
  for (int j = 0; j < n_levels; ++j) {
    sol.levels[static_cast<std::size_t>(j)] = pairs.values[static_cast<std::size_t>(j)] * k.R_He;
  }

  const double h = sol.grid.spacing();
  Eigen::VectorXd z(static_cast<Eigen::Index>(sol.grid.n_points));
  for (std::size_t i = 0; i < sol.grid.n_points; ++i) z(static_cast<Eigen::Index>(i)) = sol.grid.z(i);
  sol.z_elements = pairs.vectors.transpose() * z.asDiagonal() * pairs.vectors;
  sol.z_elements = 0.5 * (sol.z_elements + sol.z_elements.transpose()).eval();
  sol.states = pairs.vectors / std::sqrt(h);

  sol.refinement_change = std::numeric_limits<double>::quiet_NaN();
  if (options.check_refinement) {
    const Grid fine{sol.grid.z_max, 2 * sol.grid.n_points + 1};
    const Eigenpairs refined = solve_tridiagonal(field, fine, n_levels, k.r_B);
    double worst = 0.0;
    for (std::size_t j = 0; j < refined.values.size(); ++j) {
      const double a = pairs.values[j];
      const double b = refined.values[j];
      worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
    }
    sol.refinement_change = worst;
    if (worst > options.refinement_tolerance) {
      sol.warnings.push_back("stark_solve: grid too coarse, eigenvalues move by " +
                             format_sci(worst) + " (relative) under refinement");
    }
  }
  return sol;
}

Transition transition(const HydrogenSolution& sol, int i, int j, const Constants& k) {
  return {(sol.energy(j) - sol.energy(i)) / k.hbar, sol.z_element(i, j)};
}

void write_eigenfunctions_csv(std::ostream& os, const HydrogenSolution& sol, std::size_t stride) {
  if (stride == 0) stride = 1;
  os << "# e_perp_v_per_m=" << format_sci(sol.e_perp) << '\n';
  for (int n = 1; n <= sol.level_count(); ++n) {
    os << "# E_" << n << "_ev=" << format_sci(to_electronvolt(sol.energy(n))) << '\n';
  }
  os << "z_m";
  for (int n = 1; n <= sol.level_count(); ++n) os << ",psi_" << n;
  os << '\n';
  for (std::size_t i = 0; i < sol.grid.n_points; i += stride) {
    os << format_sci(sol.grid.z(i));
    for (Eigen::Index j = 0; j < sol.states.cols(); ++j) {
      os << ',' << format_sci(sol.states(static_cast<Eigen::Index>(i), j));
    }
    os << '\n';
  }
}

}  // namespace hejc
