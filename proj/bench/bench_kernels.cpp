// Serial reference kernels against the OpenMP kernels on identical inputs.

#include <benchmark/benchmark.h>

#include "schattenlab/dyadic.hpp"
#include "schattenlab/funcnorms.hpp"
#include "schattenlab/functions.hpp"
#include "schattenlab/operators.hpp"
#include "schattenlab/oscnorms.hpp"
#include "schattenlab/reference.hpp"

using namespace schattenlab;

namespace {

MetricMeasureSpace line(std::size_t n) {
  return build_grid_space(Domain::interval(0.0, 1.0), n, WeightSpec::constant(), WeightSpec::constant());
}

std::vector<double> smooth(const MetricMeasureSpace& space) {
  return sample(space, standard_family(2, 1, 7)[1]);
}

void BM_BesovNaive(benchmark::State& st) {
  const auto space = line(static_cast<std::size_t>(st.range(0)));
  const auto b = smooth(space);
  for (auto _ : st) benchmark::DoNotOptimize(reference::besov_adhoc(space, b, 2.0, Measure::nu));
}

void BM_BesovSerial(benchmark::State& st) {
  const auto space = line(static_cast<std::size_t>(st.range(0)));
  const auto b = smooth(space);
  for (auto _ : st) benchmark::DoNotOptimize(besov_adhoc(space, b, 2.0, Measure::nu, Exec::serial));
}

void BM_BesovParallel(benchmark::State& st) {
  const auto space = line(static_cast<std::size_t>(st.range(0)));
  const auto b = smooth(space);
  for (auto _ : st) benchmark::DoNotOptimize(besov_adhoc(space, b, 2.0, Measure::nu, Exec::parallel));
}

void BM_KernelMatrixReference(benchmark::State& st) {
  const auto space = line(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::kernel_entries(hilbert_kernel(), space, true));
}

void BM_KernelMatrixSerial(benchmark::State& st) {
  const auto space = line(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(kernel_matrix(hilbert_kernel(), space, DiagonalPolicy::principal_value_rowsum, Exec::serial));
}

void BM_KernelMatrixParallel(benchmark::State& st) {
  const auto space = line(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(
        kernel_matrix(hilbert_kernel(), space, DiagonalPolicy::principal_value_rowsum, Exec::parallel));
}

void BM_BallOscReference(benchmark::State& st) {
  const auto space = line(static_cast<std::size_t>(st.range(0)));
  const auto sys = build_dyadic_system(space, 6);
  const auto b = smooth(space);
  for (auto _ : st) benchmark::DoNotOptimize(reference::ball_oscillations(space, b, sys, 1.0, Measure::mu));
}

void BM_BallOscSerial(benchmark::State& st) {
  const auto space = line(static_cast<std::size_t>(st.range(0)));
  const auto sys = build_dyadic_system(space, 6);
  const auto b = smooth(space);
  for (auto _ : st) benchmark::DoNotOptimize(ball_oscillations(space, b, sys, 1.0, Measure::mu, Exec::serial));
}

void BM_BallOscParallel(benchmark::State& st) {
  const auto space = line(static_cast<std::size_t>(st.range(0)));
  const auto sys = build_dyadic_system(space, 6);
  const auto b = smooth(space);
  for (auto _ : st) benchmark::DoNotOptimize(ball_oscillations(space, b, sys, 1.0, Measure::mu, Exec::parallel));
}

}  // namespace

BENCHMARK(BM_BesovNaive)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BesovSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BesovParallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelMatrixReference)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelMatrixSerial)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelMatrixParallel)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallOscReference)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallOscSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallOscParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
