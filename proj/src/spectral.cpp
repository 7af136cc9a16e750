#include "qreg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

namespace qreg {

SpectralDecomposition diagonalize(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw DiagonalizationError("Hermitian eigensolver did not converge (dim " +
                               std::to_string(h.dim()) + ")");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

SecularEquation::SecularEquation(const ModelParams& params) : epsilon_(params.epsilon()) {
  const auto* uniform = std::get_if<UniformCoupling>(&params.coupling());
  if (uniform == nullptr) {
    throw std::invalid_argument("secular equation requires qubit-independent (uniform) coupling");
  }
  const double weight = params.shape().n_qubits() * uniform->g0 * uniform->g0;

  std::vector<double> omegas = params.frequencies();
  std::sort(omegas.begin(), omegas.end());
  for (std::size_t i = 0; i < omegas.size();) {
    std::size_t j = i + 1;
    while (j < omegas.size() && omegas[j] - omegas[i] <= 1e-14 * std::max(1.0, omegas[i])) ++j;
    const auto group = static_cast<double>(j - i);
    if (weight == 0.0) {
      cancelled_roots_.insert(cancelled_roots_.end(), j - i, omegas[i]);
    } else {
      poles_.push_back(omegas[i]);
      weights_.push_back(group * weight);
      cancelled_roots_.insert(cancelled_roots_.end(), j - i - 1, omegas[i]);
    }
    i = j;
  }
}

double SecularEquation::operator()(double energy) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < poles_.size(); ++k) sum += weights_[k] / (energy - poles_[k]);
  return energy - epsilon_ - sum;
}

double SecularEquation::derivative(double energy) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < poles_.size(); ++k) {
    const double d = energy - poles_[k];
    sum += weights_[k] / (d * d);
  }
  return 1.0 + sum;
}

namespace {

// P is strictly increasing on (lo, hi) with P(lo+) < 0 < P(hi-).
double bisect(const SecularEquation& p, double lo, double hi) {
  const double lo0 = lo;
  const double hi0 = hi;
  for (int iter = 0; iter < 4096; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = p(mid);
    if (value == 0.0) return mid;
    if (value < 0.0) lo = mid; else hi = mid;
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(mid))) break;
  }
  if (lo == lo0 || hi == hi0) {
    throw SecularError("secular bracket (" + std::to_string(lo0) + ", " + std::to_string(hi0) +
                       ") shows no sign change");
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> SecularEquation::roots() const {
  std::vector<double> out = cancelled_roots_;
  if (poles_.empty()) {
    out.push_back(epsilon_);
    std::sort(out.begin(), out.end());
    return out;
  }

  const auto n_poles = static_cast<int>(poles_.size());
  std::vector<double> found(static_cast<std::size_t>(n_poles) + 1);

  // outer brackets: expand until P changes sign
  double step = 1.0 + std::abs(epsilon_) + std::abs(poles_.front());
  double lo = std::min(epsilon_, poles_.front()) - step;
  while ((*this)(lo) >= 0.0) {
    step *= 2.0;
    lo = poles_.front() - step;
  }
  step = 1.0 + std::abs(epsilon_) + std::abs(poles_.back());
  double hi = std::max(epsilon_, poles_.back()) + step;
  while ((*this)(hi) <= 0.0) {
    step *= 2.0;
    hi = poles_.back() + step;
  }

  // exceptions must not escape the parallel region
  std::vector<std::exception_ptr> errors(found.size());
#pragma omp parallel for schedule(static)
  for (int j = 0; j <= n_poles; ++j) {
    const double left = j == 0 ? lo : poles_[j - 1];
    const double right = j == n_poles ? hi : poles_[j];
    try {
      found[j] = bisect(*this, left, right);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  out.insert(out.end(), found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> secular_roots(const ModelParams& params) {
  return SecularEquation(params).roots();
}

SymmetrySplit split_by_symmetry(const SpectralDecomposition& sd, int n_qubits, double cluster_tol) {
  const int d = sd.dim();
  if (n_qubits < 1 || n_qubits > d) throw std::invalid_argument("split_by_symmetry: bad N");

  const Eigen::VectorXcd sym = symmetric_state(n_qubits).amplitudes();
  std::vector<double> weight(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto v = sd.eigenvectors.col(i);
    const double on_sym = std::norm(sym.dot(v.head(n_qubits)));
    weight[i] = on_sym + v.tail(d - n_qubits).squaredNorm();
  }

  SymmetrySplit split;
  for (int begin = 0; begin < d;) {
    int end = begin + 1;
    while (end < d && sd.eigenvalues(end) - sd.eigenvalues(end - 1) <= cluster_tol) ++end;

    std::vector<int> members(static_cast<std::size_t>(end - begin));
    std::iota(members.begin(), members.end(), begin);
    const double total = std::accumulate(members.begin(), members.end(), 0.0,
                                         [&](double acc, int i) { return acc + weight[i]; });
    const auto n_sym = static_cast<std::size_t>(std::lround(total));
    std::stable_sort(members.begin(), members.end(),
                     [&](int a, int b) { return weight[a] > weight[b]; });
    for (std::size_t m = 0; m < members.size(); ++m) {
      (m < n_sym ? split.symmetric : split.antisymmetric).push_back(sd.eigenvalues(members[m]));
    }
    begin = end;
  }
  std::sort(split.symmetric.begin(), split.symmetric.end());
  std::sort(split.antisymmetric.begin(), split.antisymmetric.end());
  return split;
}

}  // namespace qreg
