// Microbenchmarks for the hot paths: semigroup closure, canonicity testing,
// and full enumeration of small degrees.
#include <benchmark/benchmark.h>

#include "indgen/analyze.hpp"
#include "indgen/canon.hpp"
#include "indgen/closure.hpp"
#include "indgen/search.hpp"

namespace {

using namespace indgen;

void BM_CloseChain(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  PermSet chain = folklore(FolkloreKind::Chain, degree);
  for (auto _ : state) {
    ElementMask m = close(chain);
    benchmark::DoNotOptimize(m.count());
  }
}
BENCHMARK(BM_CloseChain)->DenseRange(4, 7);

void BM_CloseCycleAndTransposition(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  PermSet a = folklore(FolkloreKind::CycleAndTransposition, degree);
  for (auto _ : state) {
    ElementMask m = close(a);
    benchmark::DoNotOptimize(m.count());
  }
}
BENCHMARK(BM_CloseCycleAndTransposition)->DenseRange(4, 7);

void BM_IsCanonical(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  PermSet a = folklore(FolkloreKind::Chain, degree);
  for (auto _ : state) benchmark::DoNotOptimize(is_canonical(a));
}
BENCHMARK(BM_IsCanonical)->DenseRange(4, 7);

void BM_CanonicalRep(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  // a deliberately non-canonical conjugate, so the minimization does work
  PermSet a = folklore(FolkloreKind::BasePoint, degree)
                  .conjugated(Perm::from_images({2, 3, 1}).embedded(degree));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_rep(a).rep.size());
}
BENCHMARK(BM_CanonicalRep)->DenseRange(4, 7);

void BM_Diameter(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  PermSet a = folklore(FolkloreKind::CycleAndTransposition, degree);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(a));
}
BENCHMARK(BM_Diameter)->DenseRange(4, 7);

void BM_Enumerate(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ClassDatabase db = enumerate_classes(degree);
    benchmark::DoNotOptimize(db.records.size());
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_PairClasses(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_generating_pair_classes(degree));
}
BENCHMARK(BM_PairClasses)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
