#include "qreg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qreg/kernels.hpp"

namespace qreg {

AmplitudeVector::AmplitudeVector(Eigen::VectorXcd coefficients, int n_qubits)
    : c_(std::move(coefficients)), n_qubits_(n_qubits) {
  if (n_qubits_ < 1 || n_qubits_ >= c_.size()) {
    throw std::invalid_argument("amplitude vector needs N >= 1 spin and N_b >= 1 mode entries");
  }
  if (std::abs(c_.norm() - 1.0) > 1e-10) throw std::invalid_argument("amplitude vector must be normalized");
}

AmplitudeVector initial_amplitudes(const SpinVector& prep, const RegisterShape& shape) {
  if (prep.size() != shape.n_qubits()) {
    throw std::invalid_argument("preparation length differs from the number of qubits");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(shape.one_excitation_dim());
  c.head(shape.n_qubits()) = prep.amplitudes();
  return AmplitudeVector(std::move(c), shape.n_qubits());
}

AmplitudeVector evolve(const SpectralDecomposition& sd, const AmplitudeVector& c0, double t) {
  if (sd.dim() != c0.dim()) throw std::invalid_argument("eigensystem and state dimensions differ");
  Eigen::VectorXcd projected = sd.eigenvectors.adjoint() * c0.coefficients();
  for (int i = 0; i < sd.dim(); ++i) projected(i) *= std::polar(1.0, -sd.eigenvalues(i) * t);
  return AmplitudeVector(sd.eigenvectors * projected, c0.n_qubits());
}

Eigen::MatrixXcd ReducedState::density_matrix() const {
  const auto n = spin_amplitudes.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  rho(0, 0) = p0;
  rho.bottomRightCorner(n, n) = spin_amplitudes * spin_amplitudes.adjoint();
  return rho;
}

ReducedState reduce(const AmplitudeVector& c) {
  // tr_b |alpha><k| = 0, so only the two diagonal blocks survive.
  return ReducedState{c.spin_block().squaredNorm(), c.boson_block().squaredNorm(),
                      c.spin_block()};
}

std::complex<double> decoherence_function(const AmplitudeVector& c0, const AmplitudeVector& ct) {
  if (c0.n_qubits() != ct.n_qubits()) throw std::invalid_argument("register sizes differ");
  return c0.spin_block().dot(ct.spin_block());
}

double fidelity(const AmplitudeVector& c0, const AmplitudeVector& ct) {
  if (c0.boson_block().squaredNorm() > 1e-20) {
    throw std::invalid_argument("fidelity needs an initial state with an empty bath");
  }
  return std::norm(decoherence_function(c0, ct));
}

namespace {

double entropy_term(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return x > 0.0 ? -x * std::log2(x) : 0.0;
}

}  // namespace

double binary_entropy_bits(double p) { return entropy_term(p) + entropy_term(1.0 - p); }

double entropy(const ReducedState& rs) { return entropy_term(rs.p0) + entropy_term(rs.p1); }

RelatedEntropies related_entropies(const ReducedState& rs) {
  const double s = entropy(rs);
  return RelatedEntropies{s, -s, -2.0 * s};
}

TimeGrid::TimeGrid(double t_max, int n_steps) : t_max_(t_max), n_steps_(n_steps) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw std::invalid_argument("t_max must be positive");
  if (n_steps < 2) throw std::invalid_argument("n_steps must be at least 2");
}

int TimeGrid::late_window_begin() const noexcept {
  return static_cast<int>(std::ceil(0.75 * (n_steps_ - 1)));
}

namespace {

TimeSeries summarize(std::vector<TimeSeriesRecord> records, const TimeGrid& grid) {
  TimeSeries ts{std::move(records), 0.0, 0.0, 0.0, 0.0};
  const int n = grid.n_steps();
  const int late = grid.late_window_begin();
  for (int j = 0; j < n; ++j) {
    const auto& r = ts.records[j];
    ts.mean_fidelity += r.fidelity;
    ts.mean_entropy += r.entropy_bits;
    if (j >= late) {
      ts.late_fidelity += r.fidelity;
      ts.late_entropy += r.entropy_bits;
    }
  }
  ts.mean_fidelity /= n;
  ts.mean_entropy /= n;
  ts.late_fidelity /= (n - late);
  ts.late_entropy /= (n - late);
  return ts;
}

}  // namespace

TimeSeries run_time_series(const SpectralDecomposition& sd, const AmplitudeVector& c0,
                           const TimeGrid& grid, Execution execution) {
  const kernels::SeriesInputs inputs(sd, c0);
  std::vector<TimeSeriesRecord> records(static_cast<std::size_t>(grid.n_steps()));
  if (execution == Execution::parallel) {
    kernels::evaluate_series_omp(inputs, grid, records);
  } else {
    kernels::evaluate_series_serial(inputs, grid, records);
  }
  return summarize(std::move(records), grid);
}

TimeSeries run_time_series(const ModelParams& params, const SpinVector& prep, const TimeGrid& grid,
                           Execution execution) {
  const auto sd = diagonalize(build_h1(params));
  return run_time_series(sd, initial_amplitudes(prep, params.shape()), grid, execution);
}

}  // namespace qreg
