#pragma once

// Hilbert-space combinatorics for the excitation-conserving register/bath model:
// sector dimensions, basis enumeration, su(2) multiplicities and the
// distinguished one-excitation spin states.

#include <compare>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace qreg {

/// Number of qubits N and bosonic modes N_b. Both are at least one.
class RegisterShape {
 public:
  RegisterShape(int n_qubits, int n_modes);

  int n_qubits() const noexcept { return n_qubits_; }
  int n_modes() const noexcept { return n_modes_; }
  /// Dimension of the one-excitation sector, N + N_b.
  int one_excitation_dim() const noexcept { return n_qubits_ + n_modes_; }

  friend bool operator==(const RegisterShape&, const RegisterShape&) = default;

 private:
  int n_qubits_;
  int n_modes_;
};

/// One basis state of an excitation sector: the set of flipped qubits and the
/// multiset of occupied modes. Indices are 1-based; spins strictly increasing,
/// bosons nondecreasing.
struct BasisLabel {
  std::vector<int> spins;
  std::vector<int> bosons;

  int excitations() const noexcept { return static_cast<int>(spins.size() + bosons.size()); }

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

struct SectorBasis {
  RegisterShape shape;
  int excitation_number;
  std::vector<BasisLabel> labels;
};

/// d_I = sum_l C(N,l) C(I-l+N_b-1, N_b-1). Throws std::overflow_error when the
/// result does not fit in 64 bits.
std::uint64_t sector_dimension(const RegisterShape& shape, int excitations);

/// All labels of the I-excitation sector, ordered by spin count and then
/// lexicographically (spins first, bosons second).
SectorBasis enumerate_basis(const RegisterShape& shape, int excitations);

/// Total spin quantum number S stored as 2S so half-integers stay exact.
struct TotalSpin {
  int twice;

  static constexpr TotalSpin integer(int s) { return TotalSpin{2 * s}; }
  static constexpr TotalSpin half_odd(int twice_s) { return TotalSpin{twice_s}; }
  double value() const noexcept { return 0.5 * twice; }
};

/// Number of su(2) irreps with total spin S in N spin-1/2 replicas,
/// N! (2S+1) / ((N/2+S+1)! (N/2-S)!). Throws std::invalid_argument when S is
/// not on the ladder {N/2, N/2-1, ..., 0 or 1/2}.
std::uint64_t su2_multiplicity(TotalSpin spin, int n_qubits);

/// Binomial coefficient with overflow detection.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Normalized vector over the single-flip states |alpha> = sigma+_alpha |0>.
class SpinVector {
 public:
  explicit SpinVector(Eigen::VectorXcd amplitudes);

  /// Normalizes its argument; throws std::invalid_argument on a zero vector.
  static SpinVector normalized(Eigen::VectorXcd amplitudes);

  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  int size() const noexcept { return static_cast<int>(amplitudes_.size()); }
  std::complex<double> operator[](int site) const { return amplitudes_(site); }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// N^{-1/2} S+ |0>: the only spin state coupled to the bath for uniform coupling.
SpinVector symmetric_state(int n_qubits);

/// |phi_k> with amplitude N^{-1/2} exp(i k j) on site j, k = 2 pi n / N,
/// 1 <= n <= N-1. Decoupled from the bath under uniform coupling.
SpinVector momentum_state(int n_qubits, int n);

/// Equal superposition of the first M sites.
SpinVector m_superposition(int n_qubits, int m);

/// c_s |psi_sym> + c_a |psi_a> for two qubits, with
/// |psi_a> = (|1> - |2>)/sqrt(2). Requires |c_s|^2 + |c_a|^2 = 1 within 1e-9.
SpinVector bell_mix(std::complex<double> c_s, std::complex<double> c_a);

}  // namespace qreg
