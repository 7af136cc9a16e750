#pragma once

// Per-time-point evaluation of the observables. The serial loop is the
// reference; the OpenMP loop must produce bit-identical records.

#include <span>

#include <Eigen/Core>

#include "qreg/dynamics.hpp"

namespace qreg::kernels {

/// Everything a grid point needs, computed once per run.
struct SeriesInputs {
  const SpectralDecomposition* sd;
  Eigen::VectorXcd projected;     // <phi_i|c0>
  Eigen::VectorXcd initial_spin;  // C_alpha(0)
  int n_qubits;

  SeriesInputs(const SpectralDecomposition& decomposition, const AmplitudeVector& c0);
};

/// Scratch buffers reused across grid points of one thread.
struct Workspace {
  Eigen::VectorXcd phased;
  Eigen::VectorXcd amplitudes;

  explicit Workspace(int dim) : phased(dim), amplitudes(dim) {}
};

TimeSeriesRecord evaluate_point(const SeriesInputs& in, double t, Workspace& ws);

void evaluate_series_serial(const SeriesInputs& in, const TimeGrid& grid,
                            std::span<TimeSeriesRecord> out);

void evaluate_series_omp(const SeriesInputs& in, const TimeGrid& grid,
                         std::span<TimeSeriesRecord> out);

}  // namespace qreg::kernels
