#include "vosa/bulk.hpp"
#include "vosa/classify.hpp"
#include "vosa/codes.hpp"
#include "vosa/n4.hpp"
#include "vosa/theta.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_ThetaE8(benchmark::State& state) {
  const auto e8 = vosa::make_lattice("E8");
  const vosa::Rational trunc(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vosa::theta(e8, std::nullopt, vosa::SignCharacter::trivial(), trunc));
}
BENCHMARK(BM_ThetaE8)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GolayWeights(benchmark::State& state) {
  const auto g = vosa::golay12();
  for (auto _ : state) benchmark::DoNotOptimize(vosa::weight_distribution(g));
}
BENCHMARK(BM_GolayWeights)->Unit(benchmark::kMicrosecond);

void BM_DecompositionDiagD(benchmark::State& state) {
  const auto b = vosa::build_bulk("diagD", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vosa::verify_decomposition(b, vosa::BulkSector::kNSNS, 3));
}
BENCHMARK(BM_DecompositionDiagD)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_DecompositionGolay(benchmark::State& state) {
  const auto b = vosa::build_bulk("golayD12");
  for (auto _ : state) benchmark::DoNotOptimize(vosa::verify_decomposition(b, vosa::BulkSector::kNSNS, 2));
}
BENCHMARK(BM_DecompositionGolay)->Unit(benchmark::kMillisecond);

void BM_ModularS(benchmark::State& state) {
  const auto b = vosa::build_bulk("diagD", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vosa::modular_check(b));
}
BENCHMARK(BM_ModularS)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EllipticGenusGolay(benchmark::State& state) {
  const auto b = vosa::build_bulk("golayD12");
  const vosa::Rational trunc(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vosa::elliptic_genus(b, trunc));
}
BENCHMARK(BM_EllipticGenusGolay)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_JacobiIdentity(benchmark::State& state) {
  const int window = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vosa::jacobi_check(window));
}
BENCHMARK(BM_JacobiIdentity)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ClassifyScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vosa::enumerate_solutions());
}
BENCHMARK(BM_ClassifyScan);

void BM_Weight2Match(benchmark::State& state) {
  for (auto _ : state)
    for (int d = 0; d < 24; ++d) benchmark::DoNotOptimize(vosa::weight2_match(d));
}
BENCHMARK(BM_Weight2Match)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
