#include "hejc/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hejc/error.hpp"
#include "hejc/format.hpp"

namespace hejc {

HybridState::HybridState(int n_max) : HybridState(fock(n_max, 0, Level::g)) {}

HybridState::HybridState(int n_max, CVector amplitudes)
    : n_max_(n_max), amplitudes_(std::move(amplitudes)) {
  if (n_max < 1) throw std::invalid_argument("HybridState: n_max must be >= 1");
  if (amplitudes_.size() != 2 * (static_cast<Eigen::Index>(n_max) + 1)) {
    throw std::invalid_argument("HybridState: amplitude vector has wrong length");
  }
}

HybridState HybridState::fock(int n_max, int m, Level level) {
  if (n_max < 1) throw std::invalid_argument("HybridState: n_max must be >= 1");
  if (m < 0 || m > n_max) throw std::invalid_argument("HybridState: Fock index out of range");
  CVector v = CVector::Zero(2 * (static_cast<Eigen::Index>(n_max) + 1));
  v(index(m, level)) = 1.0;
  return HybridState(n_max, std::move(v));
}

void HybridState::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("HybridState: cannot normalize the zero vector");
  amplitudes_ /= n;
}

double HybridState::population(Level level) const {
  double p = 0.0;
  for (int m = 0; m <= n_max_; ++m) p += population(m, level);
  return p;
}

double HybridState::fock_population(int m) const {
  return population(m, Level::g) + population(m, Level::e);
}

double HybridState::mean_phonon() const {
  double s = 0.0;
  for (int m = 1; m <= n_max_; ++m) s += m * fock_population(m);
  return s;
}

double HybridState::guard_population() const {
  return fock_population(n_max_) + fock_population(n_max_ - 1);
}

void check_truncation(const HybridState& state, const char* where) {
  const double guard = state.guard_population();
  if (!(guard < guard_tolerance)) {
    throw TruncationOverflow(std::string(where) + ": population " + format_sci(guard) +
                             " reached the top two Fock levels (n_max = " +
                             std::to_string(state.n_max()) + ")");
  }
}

double fidelity(const HybridState& a, const HybridState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("fidelity: truncation mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

MixedState::MixedState(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("MixedState: no components");
  const int n = components_.front().state.n_max();
  for (const auto& c : components_) {
    if (!(c.probability >= 0.0)) throw std::invalid_argument("MixedState: negative probability");
    if (c.state.n_max() != n) throw std::invalid_argument("MixedState: truncation mismatch");
  }
  if (std::abs(total_probability() - 1.0) > 1e-9) {
    throw std::invalid_argument("MixedState: probabilities sum to " +
                                format_sci(total_probability()));
  }
}

int MixedState::n_max() const {
  return components_.empty() ? 0 : components_.front().state.n_max();
}

double MixedState::total_probability() const {
  double s = 0.0;
  for (const auto& c : components_) s += c.probability;
  return s;
}

double MixedState::population(int m, Level level) const {
  double s = 0.0;
  for (const auto& c : components_) s += c.probability * c.state.population(m, level);
  return s;
}

double MixedState::population(Level level) const {
  double s = 0.0;
  for (const auto& c : components_) s += c.probability * c.state.population(level);
  return s;
}

double MixedState::mean_phonon() const {
  double s = 0.0;
  for (const auto& c : components_) s += c.probability * c.state.mean_phonon();
  return s;
}

CMatrix MixedState::density_matrix() const {
  const Eigen::Index d = components_.front().state.dim();
  CMatrix rho = CMatrix::Zero(d, d);
  for (const auto& c : components_) {
    rho += c.probability * c.state.amplitudes() * c.state.amplitudes().adjoint();
  }
  return rho;
}

void MixedState::compact() {
  std::vector<Component> merged;
  merged.reserve(components_.size());
  for (auto& c : components_) {
    if (c.probability == 0.0) continue;
    bool absorbed = false;
    for (auto& m : merged) {
      if (fidelity(m.state, c.state) > 1.0 - 1e-12) {
        m.probability += c.probability;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(std::move(c));
  }
  components_ = std::move(merged);
}

}  // namespace hejc
