#include <stdexcept>

#include "qreg/kernels.hpp"

namespace qreg::kernels {

SeriesInputs::SeriesInputs(const SpectralDecomposition& decomposition, const AmplitudeVector& c0)
    : sd(&decomposition),
      projected(decomposition.eigenvectors.adjoint() * c0.coefficients()),
      initial_spin(c0.spin_block()),
      n_qubits(c0.n_qubits()) {
  if (decomposition.dim() != c0.dim()) {
    throw std::invalid_argument("eigensystem and initial state dimensions differ");
  }
}

TimeSeriesRecord evaluate_point(const SeriesInputs& in, double t, Workspace& ws) {
  const auto& sd = *in.sd;
  const int d = sd.dim();
  for (int i = 0; i < d; ++i) ws.phased(i) = in.projected(i) * std::polar(1.0, -sd.eigenvalues(i) * t);
  ws.amplitudes.noalias() = sd.eigenvectors * ws.phased;

  const auto spin = ws.amplitudes.head(in.n_qubits);
  const std::complex<double> dt = in.initial_spin.dot(spin);
  const double p1 = spin.squaredNorm();
  const double p0 = ws.amplitudes.tail(d - in.n_qubits).squaredNorm();

  TimeSeriesRecord r;
  r.t = t;
  r.fidelity = std::norm(dt);
  r.p0 = p0;
  r.p1 = p1;
  r.entropy_bits = binary_entropy_bits(p1);
  r.d_re = dt.real();
  r.d_im = dt.imag();
  return r;
}

void evaluate_series_serial(const SeriesInputs& in, const TimeGrid& grid,
                            std::span<TimeSeriesRecord> out) {
  if (static_cast<int>(out.size()) != grid.n_steps()) throw std::invalid_argument("output size mismatch");
  Workspace ws(in.sd->dim());
  for (int j = 0; j < grid.n_steps(); ++j) out[j] = evaluate_point(in, grid.time(j), ws);
}

}  // namespace qreg::kernels
