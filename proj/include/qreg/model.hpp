#pragma once

// Physical parameters of the register/bath model and assembly of the
// Hamiltonian restricted to the one-excitation sector.

#include <complex>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "qreg/sector.hpp"

namespace qreg {

/// g_k(i) = g0 for every mode and qubit (Dicke limit).
struct UniformCoupling {
  double g0;
};

/// g_k(i) = g0 cos(omega_k x_i / xi), with site coordinate x_i = i - 1.
struct CosineCoupling {
  double g0;
  double xi;
};

/// Arbitrary g_k(i); rows are modes, columns are qubits.
struct ExplicitCoupling {
  Eigen::MatrixXcd g;
};

using CouplingSpec = std::variant<UniformCoupling, CosineCoupling, ExplicitCoupling>;

/// omega_n = 2 pi n / N_b, n = 1..N_b.
struct LinearDispersion {};

struct ExplicitDispersion {
  std::vector<double> omegas;
};

using Dispersion = std::variant<LinearDispersion, ExplicitDispersion>;

class ModelParams {
 public:
  /// Validates every field; throws std::invalid_argument on violation.
  ModelParams(RegisterShape shape, double epsilon, CouplingSpec coupling,
              Dispersion dispersion = LinearDispersion{});

  const RegisterShape& shape() const noexcept { return shape_; }
  double epsilon() const noexcept { return epsilon_; }
  const CouplingSpec& coupling() const noexcept { return coupling_; }
  const Dispersion& dispersion() const noexcept { return dispersion_; }

  /// Mode frequencies omega_1..omega_{N_b} in mode order.
  const std::vector<double>& frequencies() const noexcept { return frequencies_; }
  /// 1-based mode index.
  double frequency(int mode) const { return frequencies_.at(static_cast<std::size_t>(mode - 1)); }

  bool has_uniform_coupling() const noexcept {
    return std::holds_alternative<UniformCoupling>(coupling_);
  }

 private:
  RegisterShape shape_;
  double epsilon_;
  CouplingSpec coupling_;
  Dispersion dispersion_;
  std::vector<double> frequencies_;
};

/// g_n(i) for 1-based mode n and qubit i.
std::complex<double> coupling_value(const ModelParams& params, int mode, int qubit);

/// Complex square matrix that is Hermitian bit-for-bit.
class HermitianMatrix {
 public:
  /// Mirrors the upper triangle into the lower one and drops the imaginary
  /// part of the diagonal.
  static HermitianMatrix from_upper(const Eigen::MatrixXcd& upper);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  std::complex<double> operator()(int row, int col) const { return entries_(row, col); }

 private:
  explicit HermitianMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {}
  Eigen::MatrixXcd entries_;
};

/// H restricted to the one-excitation sector in the basis
/// (|1>..|N>, |k_1>..|k_{N_b}>), energies relative to |0>:
/// spin diagonal epsilon, mode diagonal omega_n, coupling block g_n(alpha).
HermitianMatrix build_h1(const ModelParams& params);

}  // namespace qreg
