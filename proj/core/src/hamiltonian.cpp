#include "hejc/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hejc {

namespace {

constexpr cplx I{0.0, 1.0};

Eigen::MatrixXd position_quadrature(int n_max) {
  const Eigen::Index d = n_max + 1;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index m = 1; m < d; ++m) {
    x(m - 1, m) = std::sqrt(static_cast<double>(m));
    x(m, m - 1) = x(m - 1, m);
  }
  return x;
}

}  // namespace

CMatrix effective_hamiltonian(Sideband sideband, double omega, double eta, double phase, int n_max,
                              const Constants& k) {
  if (n_max < 1) throw std::invalid_argument("effective_hamiltonian: n_max must be >= 1");
  const Eigen::Index d = 2 * (static_cast<Eigen::Index>(n_max) + 1);
  CMatrix h = CMatrix::Zero(d, d);
  const cplx drive = k.hbar * omega * std::exp(I * phase);
  const auto e = [](int m) { return HybridState::index(m, Level::e); };
  const auto g = [](int m) { return HybridState::index(m, Level::g); };
  switch (sideband) {
    case Sideband::carrier:
      for (int m = 0; m <= n_max; ++m) h(e(m), g(m)) = drive;
      break;
    case Sideband::red:  // sigma+ a |m,g> = sqrt(m) |m-1,e>
      for (int m = 1; m <= n_max; ++m) h(e(m - 1), g(m)) = I * eta * drive * std::sqrt(double(m));
      break;
    case Sideband::blue:  // sigma+ a^dagger |m,g> = sqrt(m+1) |m+1,e>
      for (int m = 0; m < n_max; ++m) h(e(m + 1), g(m)) = I * eta * drive * std::sqrt(m + 1.0);
      break;
  }
  CMatrix lower = h.adjoint();
  return h + lower;
}

CMatrix excitation_operator(int n_max, int sign) {
  const Eigen::Index d = 2 * (static_cast<Eigen::Index>(n_max) + 1);
  CMatrix n = CMatrix::Zero(d, d);
  for (int m = 0; m <= n_max; ++m) {
    n(HybridState::index(m, Level::g), HybridState::index(m, Level::g)) = m;
    n(HybridState::index(m, Level::e), HybridState::index(m, Level::e)) = m + sign;
  }
  return n;
}

DrivenHamiltonian::DrivenHamiltonian(const DriveSpec& drive, CouplingModel model, int n_max)
    : drive_(drive), n_max_(n_max) {
  if (n_max < 1) throw std::invalid_argument("DrivenHamiltonian: n_max must be >= 1");
  const Eigen::MatrixXd x = position_quadrature(n_max);
  const Eigen::Index d = n_max + 1;
  if (model == CouplingModel::full) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x);
    const Eigen::MatrixXd& v = es.eigenvectors();
    CVector phases(d);
    for (Eigen::Index i = 0; i < d; ++i) phases(i) = std::exp(I * drive.eta * es.eigenvalues()(i));
    recoil_ = v.cast<cplx>() * phases.asDiagonal() * v.transpose().cast<cplx>();
  } else {
    recoil_ = CMatrix::Identity(d, d) + I * drive.eta * x.cast<cplx>();
  }
  free_.resize(dim());
  for (int m = 0; m <= n_max; ++m) {
    const double vib = drive.nu * (m + 0.5);
    free_(HybridState::index(m, Level::g)) = vib - 0.5 * drive.omega_0;
    free_(HybridState::index(m, Level::e)) = vib + 0.5 * drive.omega_0;
  }
}

double DrivenHamiltonian::period() const { return 2.0 * std::numbers::pi / drive_.omega_l; }

void DrivenHamiltonian::interaction(double t, CMatrix& out) const {
  const Eigen::Index d = n_max_ + 1;
  out.resize(dim(), dim());
  const cplx carrier_phase = std::exp(I * (drive_.phase - drive_.omega_l * t));
  const cplx rot = std::exp(I * drive_.nu * t);
  // Spin factor A(t) in the {g, e} basis.
  const cplx a_gg = -drive_.omega_tilde;
  const cplx a_ee = drive_.omega_tilde;
  const cplx a_eg = drive_.omega * std::exp(I * drive_.omega_0 * t);  // sigma+
  const cplx a_ge = std::conj(a_eg);                                  // sigma-

  // F_mn = e^{i phi - i omega_l t} e^{i nu t (m - n)} D_mn; B = F + F^dagger.
  std::vector<cplx> rot_pow(static_cast<std::size_t>(2 * d - 1));
  const Eigen::Index offset = d - 1;
  rot_pow[static_cast<std::size_t>(offset)] = 1.0;
  for (Eigen::Index j = 1; j < d; ++j) {
    rot_pow[static_cast<std::size_t>(offset + j)] = rot_pow[static_cast<std::size_t>(offset + j - 1)] * rot;
    rot_pow[static_cast<std::size_t>(offset - j)] = std::conj(rot_pow[static_cast<std::size_t>(offset + j)]);
  }
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = m; n < d; ++n) {
      const cplx f_mn = carrier_phase * rot_pow[static_cast<std::size_t>(offset + m - n)] * recoil_(m, n);
      const cplx f_nm = carrier_phase * rot_pow[static_cast<std::size_t>(offset + n - m)] * recoil_(n, m);
      const cplx b = f_mn + std::conj(f_nm);
      const Eigen::Index gm = 2 * m, em = 2 * m + 1, gn = 2 * n, en = 2 * n + 1;
      out(gm, gn) = a_gg * b;
      out(gm, en) = a_ge * b;
      out(em, gn) = a_eg * b;
      out(em, en) = a_ee * b;
      if (n != m) {
        const cplx bc = std::conj(b);
        out(gn, gm) = std::conj(a_gg) * bc;
        out(en, gm) = std::conj(a_ge) * bc;
        out(gn, em) = std::conj(a_eg) * bc;
        out(en, em) = std::conj(a_ee) * bc;
      }
    }
  }
}

void DrivenHamiltonian::lab(double t, CMatrix& out) const {
  const Eigen::Index d = n_max_ + 1;
  out.resize(dim(), dim());
  const cplx carrier_phase = std::exp(I * (drive_.phase - drive_.omega_l * t));
  const double a_gg = -drive_.omega_tilde;
  const double a_ee = drive_.omega_tilde;
  const double a_x = drive_.omega;
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = m; n < d; ++n) {
      const cplx b = carrier_phase * recoil_(m, n) + std::conj(carrier_phase * recoil_(n, m));
      const Eigen::Index gm = 2 * m, em = 2 * m + 1, gn = 2 * n, en = 2 * n + 1;
      out(gm, gn) = a_gg * b;
      out(gm, en) = a_x * b;
      out(em, gn) = a_x * b;
      out(em, en) = a_ee * b;
      if (n != m) {
        const cplx bc = std::conj(b);
        out(gn, gm) = a_gg * bc;
        out(en, gm) = a_x * bc;
        out(gn, em) = a_x * bc;
        out(en, em) = a_ee * bc;
      }
    }
  }
  out.diagonal() += free_.cast<cplx>();
}

}  // namespace hejc
