#include "hejc/propagator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hejc/error.hpp"
#include "hejc/format.hpp"

namespace hejc {

namespace {

constexpr cplx I{0.0, 1.0};

double row_sum_norm(const CMatrix& h) { return h.cwiseAbs().rowwise().sum().maxCoeff(); }

CMatrix nearest_unitary(const CMatrix& u) {
  Eigen::JacobiSVD<CMatrix> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

CMatrix unitary_power(CMatrix base, std::uint64_t n) {
  CMatrix result = CMatrix::Identity(base.rows(), base.cols());
  bool first = true;
  while (n > 0) {
    if (n & 1u) {
      result = first ? base : nearest_unitary(base * result);
      first = false;
    }
    n >>= 1u;
    if (n > 0) base = nearest_unitary(base * base);
  }
  return result;
}

CVector free_phase(const DrivenHamiltonian& h, double t, bool inverse) {
  const double sign = inverse ? 1.0 : -1.0;
  CVector ph(h.dim());
  for (Eigen::Index i = 0; i < h.dim(); ++i) ph(i) = std::exp(sign * I * h.free_energies()(i) * t);
  return ph;
}

CVector run_direct(const DrivenHamiltonian& h, const CVector& psi0, double t0, double t1,
                   std::uint64_t steps) {
  CVector psi = psi0;
  CMatrix hm;
  const double dt = (t1 - t0) / static_cast<double>(steps);
  for (std::uint64_t j = 0; j < steps; ++j) {
    h.interaction(t0 + (static_cast<double>(j) + 0.5) * dt, hm);
    apply_expm_hermitian(hm, dt, psi);
  }
  return psi;
}

// Lab-frame propagator over [t0, t0 + span] built from `steps` midpoint steps.
CMatrix lab_segment(const DrivenHamiltonian& h, double t0, double span, std::uint64_t steps) {
  CMatrix u = CMatrix::Identity(h.dim(), h.dim());
  CMatrix hm;
  const double dt = span / static_cast<double>(steps);
  for (std::uint64_t j = 0; j < steps; ++j) {
    h.lab(t0 + (static_cast<double>(j) + 0.5) * dt, hm);
    u = expm_hermitian(hm, dt) * u;
  }
  return u;
}

struct PeriodicRun {
  CVector psi;
  std::uint64_t equivalent_steps;
};

PeriodicRun run_periodic(const DrivenHamiltonian& h, const CVector& psi0, double t0, double t1,
                         std::uint64_t steps_per_period) {
  const double period = h.period();
  const double span = t1 - t0;
  const auto whole = static_cast<std::uint64_t>(std::floor(span / period));
  const double rest = span - static_cast<double>(whole) * period;

  CVector psi = free_phase(h, t0, false).asDiagonal() * psi0;  // to lab frame
  std::uint64_t equivalent = 0;
  if (whole > 0) {
    const CMatrix one_period = nearest_unitary(lab_segment(h, t0, period, steps_per_period));
    psi = unitary_power(one_period, whole) * psi;
    equivalent += whole * steps_per_period;
  }
  if (rest > 0.0) {
    const auto rest_steps = static_cast<std::uint64_t>(
        std::ceil(rest / period * static_cast<double>(steps_per_period)));
    const std::uint64_t n = rest_steps == 0 ? 1 : rest_steps;
    psi = lab_segment(h, t0, rest, n) * psi;  // H(t) is periodic, start phase is t0
    equivalent += n;
  }
  psi = free_phase(h, t1, true).asDiagonal() * psi;  // back to interaction picture
  return {psi, equivalent};
}

}  // namespace

CMatrix expm_hermitian(const CMatrix& h, double dt) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) throw SolverError("expm_hermitian: eigensolver failed");
  CVector phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) phases(i) = std::exp(-I * es.eigenvalues()(i) * dt);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

void apply_expm_hermitian(const CMatrix& h, double dt, CVector& psi) {
  const double theta = row_sum_norm(h) * std::abs(dt);
  if (theta > 0.5) {
    psi = expm_hermitian(h, dt) * psi;
    return;
  }
  CVector term = psi;
  CVector acc = psi;
  const double scale = psi.norm();
  for (int k = 1; k <= 40; ++k) {
    term = (-I * dt / static_cast<double>(k)) * (h * term);
    acc += term;
    if (term.norm() <= 1e-18 * scale) break;
  }
  psi = std::move(acc);
}

Propagation numeric_evolve(const HybridState& state, const DriveSpec& drive, double t_start,
                           double t_end, CouplingModel model, const StepPolicy& policy) {
  if (!(t_end >= t_start)) throw std::invalid_argument("numeric_evolve: t_end < t_start");
  const double span = t_end - t_start;
  if (span == 0.0) return {state, 0.0, 0, 0, 0.0, Integrator::direct};

  const DrivenHamiltonian h(drive, model, state.n_max());
  const double initial_norm = state.norm();
  const double direct_estimate = std::ceil(span * policy.resolution * h.max_frequency());

  Integrator integrator = policy.integrator;
  if (integrator == Integrator::automatic) {
    integrator = direct_estimate <= static_cast<double>(policy.direct_step_limit)
                     ? Integrator::direct
                     : Integrator::periodic;
  }

  std::uint64_t steps = integrator == Integrator::direct
                            ? static_cast<std::uint64_t>(std::max(1.0, direct_estimate))
                            : static_cast<std::uint64_t>(std::max(1, policy.initial_period_steps));
  const auto run = [&](std::uint64_t n, std::uint64_t& equivalent) -> CVector {
    if (integrator == Integrator::direct) {
      equivalent = n;
      return run_direct(h, state.amplitudes(), t_start, t_end, n);
    }
    auto r = run_periodic(h, state.amplitudes(), t_start, t_end, n);
    equivalent = r.equivalent_steps;
    return std::move(r.psi);
  };

  std::uint64_t equivalent = 0;
  CVector coarse = run(steps, equivalent);
  double distance = 0.0;
  int refinements = 0;
  for (;;) {
    if (refinements >= policy.max_refinements) {
      throw StepSizeError("numeric_evolve: no convergence after " + std::to_string(refinements) +
                          " halvings (last distance " + format_sci(distance) + ")");
    }
    steps *= 2;
    ++refinements;
    CVector fine = run(steps, equivalent);
    distance = (fine - coarse).norm();
    coarse = std::move(fine);
    if (distance < policy.tolerance) break;
  }

  Propagation out{HybridState(state.n_max(), std::move(coarse)), 0.0, equivalent, refinements,
                  distance, integrator};
  out.norm_drift = std::abs(out.state.norm() - initial_norm);
  if (out.norm_drift > policy.norm_drift_limit) {
    throw StepSizeError("numeric_evolve: norm drift " + format_sci(out.norm_drift) +
                        " exceeds limit");
  }
  if (policy.enforce_guard) check_truncation(out.state, "numeric_evolve");
  return out;
}

}  // namespace hejc
