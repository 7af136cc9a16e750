#include <doctest.h>

#include <cstring>
#include <vector>

#include <omp.h>

#include "qreg/kernels.hpp"

using namespace qreg;

namespace {

bool same_bits(const TimeSeriesRecord& a, const TimeSeriesRecord& b) {
  return std::memcmp(&a, &b, sizeof(TimeSeriesRecord)) == 0;
}

}  // namespace

TEST_CASE("OpenMP loop reproduces the serial loop bit for bit") {
  const ModelParams p(RegisterShape(3, 120), 1.0, CosineCoupling{0.015, 4.0});
  const auto sd = diagonalize(build_h1(p));
  const auto c0 = initial_amplitudes(m_superposition(3, 2), p.shape());
  const kernels::SeriesInputs in(sd, c0);
  const TimeGrid grid(1500.0, 1237);

  std::vector<TimeSeriesRecord> serial(grid.n_steps()), parallel(grid.n_steps());
  kernels::evaluate_series_serial(in, grid, serial);
  for (int threads : {1, 2, 3, 8}) {
    omp_set_num_threads(threads);
    kernels::evaluate_series_omp(in, grid, parallel);
    for (int j = 0; j < grid.n_steps(); ++j) REQUIRE(same_bits(serial[j], parallel[j]));
  }
}

TEST_CASE("run_time_series gives the same result either way") {
  const ModelParams p(RegisterShape(2, 60), 1.0, UniformCoupling{0.02});
  const TimeGrid grid(400.0, 801);
  const auto a = run_time_series(p, symmetric_state(2), grid, Execution::serial);
  const auto b = run_time_series(p, symmetric_state(2), grid, Execution::parallel);
  for (std::size_t j = 0; j < a.records.size(); ++j) REQUIRE(same_bits(a.records[j], b.records[j]));
  CHECK(a.late_fidelity == b.late_fidelity);
  CHECK(a.mean_entropy == b.mean_entropy);
}

TEST_CASE("output span must match the grid") {
  const ModelParams p(RegisterShape(1, 4), 1.0, UniformCoupling{0.02});
  const auto sd = diagonalize(build_h1(p));
  const kernels::SeriesInputs in(sd, initial_amplitudes(symmetric_state(1), p.shape()));
  std::vector<TimeSeriesRecord> out(5);
  CHECK_THROWS_AS(kernels::evaluate_series_omp(in, TimeGrid(1.0, 6), out), std::invalid_argument);
  CHECK_THROWS_AS(kernels::evaluate_series_serial(in, TimeGrid(1.0, 6), out), std::invalid_argument);
}
