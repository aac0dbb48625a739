// Blocked parallel kernel vs the serial dense reference, and workers = 1 vs N.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "confspace/gcalg.hpp"
#include "confspace/reference.hpp"
#include "confspace/specseq.hpp"

using namespace confspace;

namespace {

// (n, p, q) pieces small enough for the dense reference.
void piece_args(benchmark::internal::Benchmark* b) {
  b->Args({3, 2, 1})->Args({3, 3, 2})->Args({4, 2, 2})->Args({4, 3, 1});
}

void BM_BlockedKernel(benchmark::State& state) {
  const Layout L(static_cast<int>(state.range(0)));
  const int p = static_cast<int>(state.range(1)), q = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(BidegreeSpace::build(L, p, q, RelationSet::e2()).dim());
}
BENCHMARK(BM_BlockedKernel)->Apply(piece_args)->Unit(benchmark::kMillisecond);

void BM_DenseReference(benchmark::State& state) {
  const Layout L(static_cast<int>(state.range(0)));
  const int p = static_cast<int>(state.range(1)), q = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(reference_space(L, p, q, RelationSet::e2()).standard.size());
}
BENCHMARK(BM_DenseReference)->Apply(piece_args)->Unit(benchmark::kMillisecond);

void BM_E3Dims(benchmark::State& state) {
  SpectralOptions opts;
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(e3_dims(static_cast<int>(state.range(0)), opts).dims.size());
}
BENCHMARK(BM_E3Dims)
    ->Args({4, 1})
    ->Args({5, 1})
    ->Args({5, omp_get_num_procs()})
    ->Unit(benchmark::kMillisecond);

void BM_BigPiece(benchmark::State& state) {
  const Layout L(5);
  SpaceOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BidegreeSpace::build(L, 5, 3, RelationSet::e2(), opts).dim());
}
BENCHMARK(BM_BigPiece)->Arg(1)->Arg(omp_get_num_procs())->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
