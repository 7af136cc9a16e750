// Serial reference loop against the OpenMP loop on the preset problem size
// (N = 4, N_b = 200, 4001 grid points).

#include <vector>

#include <benchmark/benchmark.h>

#include "qreg/kernels.hpp"

namespace {

struct Problem {
  qreg::ModelParams params{qreg::RegisterShape(4, 200), 1.0, qreg::UniformCoupling{0.01}};
  qreg::SpectralDecomposition sd = qreg::diagonalize(qreg::build_h1(params));
  qreg::AmplitudeVector c0 = qreg::initial_amplitudes(qreg::m_superposition(4, 1), params.shape());
  qreg::kernels::SeriesInputs inputs{sd, c0};
};

const Problem& problem() {
  static const Problem p;
  return p;
}

template <auto Kernel>
void bm_series(benchmark::State& state) {
  const auto& p = problem();
  const qreg::TimeGrid grid(2000.0, static_cast<int>(state.range(0)));
  std::vector<qreg::TimeSeriesRecord> out(grid.n_steps());
  for (auto _ : state) {
    Kernel(p.inputs, grid, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * grid.n_steps());
}

void bm_diagonalize(benchmark::State& state) {
  const qreg::ModelParams params(qreg::RegisterShape(4, static_cast<int>(state.range(0))), 1.0,
                                 qreg::UniformCoupling{0.01});
  const auto h = qreg::build_h1(params);
  for (auto _ : state) benchmark::DoNotOptimize(qreg::diagonalize(h));
}

}  // namespace

BENCHMARK(bm_series<qreg::kernels::evaluate_series_serial>)->Name("series/serial")->Arg(1001)->Arg(4001)
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bm_series<qreg::kernels::evaluate_series_omp>)->Name("series/omp")->Arg(1001)->Arg(4001)
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bm_diagonalize)->Name("diagonalize")->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
