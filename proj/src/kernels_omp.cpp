#include <stdexcept>

#include <omp.h>

#include "qreg/kernels.hpp"

namespace qreg::kernels {

void evaluate_series_omp(const SeriesInputs& in, const TimeGrid& grid,
                         std::span<TimeSeriesRecord> out) {
  if (static_cast<int>(out.size()) != grid.n_steps()) throw std::invalid_argument("output size mismatch");
  const int n = grid.n_steps();
  const int d = in.sd->dim();

#pragma omp parallel
  {
    Workspace ws(d);
#pragma omp for schedule(static)
    for (int j = 0; j < n; ++j) out[j] = evaluate_point(in, grid.time(j), ws);
  }
}

}  // namespace qreg::kernels
