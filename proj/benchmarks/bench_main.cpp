#include <benchmark/benchmark.h>

#include <random>

#include "hforge/analysis.hpp"
#include "hforge/mubs.hpp"
#include "hforge/orbits.hpp"
#include "hforge/scan.hpp"

using namespace hforge;

namespace {

orbits::Bc9Params generic_params() {
  return orbits::zeta_to_params({{0.37, 0.81}, +1, +1});
}

}  // namespace

static void BM_bc9_matrix(benchmark::State& state) {
  orbits::Bc9Params p = generic_params();
  for (auto _ : state) benchmark::DoNotOptimize(orbits::bc9_matrix(p));
}
BENCHMARK(BM_bc9_matrix);

static void BM_classify_bc9(benchmark::State& state) {
  orbits::Bc9Params p = generic_params();
  for (auto _ : state) benchmark::DoNotOptimize(orbits::classify_bc9(p));
}
BENCHMARK(BM_classify_bc9);

static void BM_is_hadamard9(benchmark::State& state) {
  Matrix h = orbits::bc9_matrix(generic_params());
  for (auto _ : state) benchmark::DoNotOptimize(is_hadamard(h, 1e-9));
}
BENCHMARK(BM_is_hadamard9);

static void BM_defect9(benchmark::State& state) {
  Matrix h = orbits::bc9_matrix(generic_params());
  for (auto _ : state) benchmark::DoNotOptimize(analysis::defect(h));
}
BENCHMARK(BM_defect9);

static void BM_zeta_to_params(benchmark::State& state) {
  orbits::ZetaPoint z{{0.37, 0.81}, +1, +1};
  for (auto _ : state) benchmark::DoNotOptimize(orbits::zeta_to_params(z));
}
BENCHMARK(BM_zeta_to_params);

static void BM_equivalence_found(benchmark::State& state) {
  Matrix a = orbits::special("C3xC3");
  Matrix b = orbits::special("F3xF3");
  for (auto _ : state) benchmark::DoNotOptimize(analysis::equivalent(a, b));
}
BENCHMARK(BM_equivalence_found);

static void BM_equivalence_exhausted(benchmark::State& state) {
  Matrix a = orbits::special("BC9Ab");
  Matrix b = orbits::special("BC9Ab_dagger");
  for (auto _ : state) benchmark::DoNotOptimize(analysis::equivalent(a, b));
}
BENCHMARK(BM_equivalence_exhausted);

static void BM_h3_submatrix_scan(benchmark::State& state) {
  Matrix h = orbits::bc9_matrix(generic_params());
  for (auto _ : state) benchmark::DoNotOptimize(analysis::h3_submatrix_scan(h));
}
BENCHMARK(BM_h3_submatrix_scan);

static void BM_haagerup_fingerprint(benchmark::State& state) {
  Matrix h = fourier(9);
  for (auto _ : state) benchmark::DoNotOptimize(analysis::haagerup_fingerprint(h));
}
BENCHMARK(BM_haagerup_fingerprint);

static void BM_zeta_scan_row(benchmark::State& state) {
  scan::GridSpec g;
  g.resolution = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan::zeta_defect_scan(g, 1));
}
BENCHMARK(BM_zeta_scan_row)->Arg(11)->Arg(21)->Unit(benchmark::kMillisecond);

static void BM_mub_build_and_verify(benchmark::State& state) {
  for (auto _ : state) {
    mubs::MubSet m = mubs::build_m_set();
    benchmark::DoNotOptimize(mubs::verify_mub(m));
  }
}
BENCHMARK(BM_mub_build_and_verify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
