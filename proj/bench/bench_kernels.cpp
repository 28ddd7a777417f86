// Serial reference vs OpenMP path for the heavy kernels.
// Second benchmark argument: 0 = serial, 1 = openmp.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "thinseq/carleson.hpp"
#include "thinseq/gram.hpp"
#include "thinseq/jones.hpp"
#include "thinseq/separation.hpp"

namespace {

using namespace thinseq;

PointSequence random_sequence(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> gap(1e-4, 1.0), angle(-3.14159, 3.14159);
  std::vector<DiscPoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(DiscPoint::polar(gap(rng), angle(rng)));
  return PointSequence(std::move(pts));
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::openmp : Exec::serial; }

void BM_Separation(benchmark::State& state) {
  const auto seq = random_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(separation_constants(seq, exec_of(state)));
}

void BM_Gram(benchmark::State& state) {
  const auto seq = random_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(seq, 0, exec_of(state)));
}

void BM_RecordedSumBound(benchmark::State& state) {
  const JonesBasis basis(random_sequence(static_cast<std::size_t>(state.range(0))));
  const auto grid = default_grid().points();
  for (auto _ : state) benchmark::DoNotOptimize(basis.recorded_sum_bound(grid, 0, exec_of(state)));
}

void BM_KernelProbe(benchmark::State& state) {
  const auto mu = mu_measure(random_sequence(static_cast<std::size_t>(state.range(0))), 0);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_embedding_constant(mu, {}, 128, exec_of(state)));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (long n : {64, 256, 1024})
    for (long e : {0, 1}) b->Args({n, e});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Separation)->Apply(sizes);
BENCHMARK(BM_Gram)->Apply(sizes);
BENCHMARK(BM_RecordedSumBound)->Apply(sizes);
BENCHMARK(BM_KernelProbe)->Apply(sizes);

BENCHMARK_MAIN();
