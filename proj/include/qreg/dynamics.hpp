#pragma once

// Exact unitary evolution in the one-excitation sector, the partial trace over
// the bath, and the register observables derived from it.

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "qreg/model.hpp"
#include "qreg/sector.hpp"
#include "qreg/spectral.hpp"

namespace qreg {

/// Coefficients of the global state over (|1>..|N>, |k_1>..|k_{N_b}>).
/// Unit norm within 1e-10.
class AmplitudeVector {
 public:
  AmplitudeVector(Eigen::VectorXcd coefficients, int n_qubits);

  const Eigen::VectorXcd& coefficients() const noexcept { return c_; }
  int n_qubits() const noexcept { return n_qubits_; }
  int n_modes() const noexcept { return static_cast<int>(c_.size()) - n_qubits_; }
  int dim() const noexcept { return static_cast<int>(c_.size()); }

  auto spin_block() const { return c_.head(n_qubits_); }
  auto boson_block() const { return c_.tail(c_.size() - n_qubits_); }

 private:
  Eigen::VectorXcd c_;
  int n_qubits_;
};

/// |psi_0^s> (x) |0>_b: spin block from `prep`, boson block zero.
AmplitudeVector initial_amplitudes(const SpinVector& prep, const RegisterShape& shape);

/// C(t) = sum_i <phi_i|c0> e^{-i E_i t} |phi_i>.
AmplitudeVector evolve(const SpectralDecomposition& sd, const AmplitudeVector& c0, double t);

/// Register marginal: rho_s = P1 |psi_s><psi_s| + P0 |0><0| with
/// sqrt(P1)|psi_s> = spin_amplitudes.
struct ReducedState {
  double p1;
  double p0;
  Eigen::VectorXcd spin_amplitudes;

  /// Dense rho_s over (|0>_s, |1>..|N>).
  Eigen::MatrixXcd density_matrix() const;
};

ReducedState reduce(const AmplitudeVector& c);

/// D(t) = sum_alpha C_alpha(t) conj(C_alpha(0)).
std::complex<double> decoherence_function(const AmplitudeVector& c0, const AmplitudeVector& ct);

/// |D(t)|^2 = <psi_0^s| rho_s(t) |psi_0^s>. `c0` must have an empty boson block.
double fidelity(const AmplitudeVector& c0, const AmplitudeVector& ct);

/// Binary entropy of {P0, P1} in bits, 0 log 0 = 0.
double entropy(const ReducedState& rs);
double binary_entropy_bits(double p);

struct RelatedEntropies {
  double bath;         // S_b = S_s
  double conditional;  // S(S|B) = S(B|S) = -S_s
  double mutual;       // S(B:S) = -2 S_s
};

RelatedEntropies related_entropies(const ReducedState& rs);

/// Uniform grid t_j = j t_max / (n_steps - 1).
class TimeGrid {
 public:
  TimeGrid(double t_max, int n_steps);

  double t_max() const noexcept { return t_max_; }
  int n_steps() const noexcept { return n_steps_; }
  double time(int j) const noexcept { return j * (t_max_ / (n_steps_ - 1)); }
  /// First index of the final 25% of the window.
  int late_window_begin() const noexcept;

 private:
  double t_max_;
  int n_steps_;
};

struct TimeSeriesRecord {
  double t;
  double fidelity;
  double entropy_bits;
  double p0;
  double p1;
  double d_re;
  double d_im;
};

struct TimeSeries {
  std::vector<TimeSeriesRecord> records;
  double late_fidelity;   // mean F over the final 25% of the grid
  double late_entropy;    // mean S over the final 25% of the grid
  double mean_fidelity;   // mean F over the whole grid
  double mean_entropy;
};

enum class Execution { serial, parallel };

/// Builds H once, diagonalizes once and evaluates every grid point.
TimeSeries run_time_series(const ModelParams& params, const SpinVector& prep, const TimeGrid& grid,
                           Execution execution = Execution::parallel);

/// Same, reusing an existing eigensystem.
TimeSeries run_time_series(const SpectralDecomposition& sd, const AmplitudeVector& c0,
                           const TimeGrid& grid, Execution execution = Execution::parallel);

}  // namespace qreg
