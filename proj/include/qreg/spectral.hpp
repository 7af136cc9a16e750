#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "qreg/model.hpp"

namespace qreg {

/// Eigenvalues in ascending order; column i of `eigenvectors` belongs to
/// eigenvalue i.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  int dim() const noexcept { return static_cast<int>(eigenvalues.size()); }
};

class DiagonalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full eigensystem of a Hermitian matrix. Deterministic for identical input.
/// Throws DiagonalizationError if the iteration does not converge.
SpectralDecomposition diagonalize(const HermitianMatrix& h);

class SecularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P(E) = E - epsilon - N sum_k |g_k|^2 / (E - omega_k) for uniform coupling.
///
/// Degenerate frequencies are merged into a single pole carrying the summed
/// weight; a pole with zero weight cancels and its frequency is itself a root.
class SecularEquation {
 public:
  /// Throws std::invalid_argument unless the coupling is uniform.
  explicit SecularEquation(const ModelParams& params);

  double operator()(double energy) const;
  double derivative(double energy) const;

  /// Distinct poles in ascending order and their residue weights N sum |g|^2.
  const std::vector<double>& poles() const noexcept { return poles_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// All N_b + 1 roots in ascending order, each to interval width
  /// <= 1e-12 max(1, |E|). Roots between distinct pole pairs are independent
  /// and are bracketed concurrently.
  std::vector<double> roots() const;

 private:
  double epsilon_;
  std::vector<double> poles_;
  std::vector<double> weights_;
  std::vector<double> cancelled_roots_;  // frequencies that are roots by degeneracy
};

std::vector<double> secular_roots(const ModelParams& params);

/// Eigenvalues partitioned into the sector coupled to the bath (symmetric
/// spin state plus all modes) and its complement, for uniform coupling.
struct SymmetrySplit {
  std::vector<double> symmetric;
  std::vector<double> antisymmetric;
};

/// Classifies eigenvalues by the weight of each eigenvector on the symmetric
/// subspace. Eigenvalues closer than `cluster_tol` are grouped and the group's
/// total weight decides how many of its members are symmetric, so mixing
/// inside a degenerate cluster does not matter.
SymmetrySplit split_by_symmetry(const SpectralDecomposition& sd, int n_qubits,
                                double cluster_tol = 1e-9);

}  // namespace qreg
