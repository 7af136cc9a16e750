#include "qreg/sector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qreg {

namespace {

using u128 = unsigned __int128;
constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_narrow(u128 value, const char* what) {
  if (value > kU64Max) throw std::overflow_error(std::string(what) + ": exceeds 64-bit range");
  return static_cast<std::uint64_t>(value);
}

void require_sites(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("spin vector needs at least one qubit");
}

// Appends every nondecreasing sequence of `size` mode indices in [first, n_modes].
void collect_multisets(int n_modes, int size, int first, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (int k = first; k <= n_modes; ++k) {
    current.push_back(k);
    collect_multisets(n_modes, size, k, current, out);
    current.pop_back();
  }
}

// Appends every strictly increasing sequence of `size` site indices in [first, n_qubits].
void collect_subsets(int n_qubits, int size, int first, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  const int remaining = size - static_cast<int>(current.size());
  for (int a = first; a <= n_qubits - remaining + 1; ++a) {
    current.push_back(a);
    collect_subsets(n_qubits, size, a + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

RegisterShape::RegisterShape(int n_qubits, int n_modes) : n_qubits_(n_qubits), n_modes_(n_modes) {
  if (n_qubits < 1) throw std::invalid_argument("register needs at least one qubit");
  if (n_modes < 1) throw std::invalid_argument("bath needs at least one mode");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u128 result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // result == C(n-k+i, i) here, so the division is exact.
    result = result * (n - k + i + 1) / (i + 1);
    if (result > kU64Max) throw std::overflow_error("binomial coefficient exceeds 64-bit range");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t sector_dimension(const RegisterShape& shape, int excitations) {
  if (excitations < 0) throw std::invalid_argument("excitation number must be nonnegative");
  const auto n = static_cast<std::uint64_t>(shape.n_qubits());
  const auto nb = static_cast<std::uint64_t>(shape.n_modes());
  const auto total = static_cast<std::uint64_t>(excitations);
  u128 dim = 0;
  for (std::uint64_t l = 0; l <= std::min(n, total); ++l) {
    // boson multisets of size I-l over N_b modes
    const u128 term = static_cast<u128>(binomial(n, l)) * binomial(total - l + nb - 1, nb - 1);
    dim += term;
    checked_narrow(dim, "sector dimension");
  }
  return checked_narrow(dim, "sector dimension");
}

SectorBasis enumerate_basis(const RegisterShape& shape, int excitations) {
  SectorBasis basis{shape, excitations, {}};
  basis.labels.reserve(sector_dimension(shape, excitations));

  const int max_spins = std::min(excitations, shape.n_qubits());
  for (int n = max_spins; n >= 0; --n) {
    std::vector<std::vector<int>> subsets;
    std::vector<std::vector<int>> multisets;
    std::vector<int> scratch;
    collect_subsets(shape.n_qubits(), n, 1, scratch, subsets);
    collect_multisets(shape.n_modes(), excitations - n, 1, scratch, multisets);
    for (const auto& spins : subsets) {
      for (const auto& bosons : multisets) basis.labels.push_back({spins, bosons});
    }
  }
  return basis;
}

std::uint64_t su2_multiplicity(TotalSpin spin, int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("su2_multiplicity: N must be positive");
  if (spin.twice < 0 || spin.twice > n_qubits || (n_qubits - spin.twice) % 2 != 0) {
    throw std::invalid_argument("su2_multiplicity: S = " + std::to_string(spin.value()) +
                                " is not an admissible total spin for N = " +
                                std::to_string(n_qubits));
  }
  // N!(2S+1)/((N/2+S+1)!(N/2-S)!) = C(N, j) (2S+1) / (N-j+1), j = N/2 - S
  const auto j = static_cast<std::uint64_t>((n_qubits - spin.twice) / 2);
  const auto n = static_cast<std::uint64_t>(n_qubits);
  const u128 numerator = static_cast<u128>(binomial(n, j)) * static_cast<u128>(spin.twice + 1);
  const u128 denominator = n - j + 1;
  if (numerator % denominator != 0) throw std::logic_error("su2_multiplicity: inexact division");
  return checked_narrow(numerator / denominator, "su2 multiplicity");
}

SpinVector::SpinVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw std::invalid_argument("spin vector must be nonempty");
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("spin vector must have unit norm");
  }
}

SpinVector SpinVector::normalized(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite spin vector");
  }
  amplitudes /= norm;
  return SpinVector(std::move(amplitudes));
}

SpinVector symmetric_state(int n_qubits) {
  require_sites(n_qubits);
  return SpinVector(Eigen::VectorXcd::Constant(n_qubits, 1.0 / std::sqrt(double(n_qubits))));
}

SpinVector momentum_state(int n_qubits, int n) {
  if (n_qubits < 2) throw std::invalid_argument("momentum states need N >= 2");
  if (n < 1 || n >= n_qubits) {
    throw std::invalid_argument("momentum index must satisfy 1 <= n <= N-1 (n = 0 is the symmetric state)");
  }
  const double k = 2.0 * std::numbers::pi * n / n_qubits;
  const double scale = 1.0 / std::sqrt(double(n_qubits));
  Eigen::VectorXcd amps(n_qubits);
  for (int j = 1; j <= n_qubits; ++j) amps(j - 1) = scale * std::polar(1.0, k * j);
  return SpinVector(std::move(amps));
}

SpinVector m_superposition(int n_qubits, int m) {
  require_sites(n_qubits);
  if (m < 1 || m > n_qubits) throw std::invalid_argument("M must satisfy 1 <= M <= N");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(n_qubits);
  amps.head(m).setConstant(1.0 / std::sqrt(double(m)));
  return SpinVector(std::move(amps));
}

SpinVector bell_mix(std::complex<double> c_s, std::complex<double> c_a) {
  const double weight = std::norm(c_s) + std::norm(c_a);
  if (std::abs(weight - 1.0) > 1e-9) {
    throw std::invalid_argument("bell_mix requires |c_s|^2 + |c_a|^2 = 1");
  }
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd amps(2);
  amps << r * (c_s + c_a), r * (c_s - c_a);
  return SpinVector::normalized(std::move(amps));
}

}  // namespace qreg
