#include <benchmark/benchmark.h>

#include "exg/fixed_points.hpp"
#include "exg/root_system.hpp"
#include "exg/subgroups.hpp"
#include "exg/torsion.hpp"

namespace {

void BM_BuildRootSystemE8(benchmark::State& state) {
  for (auto _ : state) {
    exg::RootSystem rs(exg::E8);
    benchmark::DoNotOptimize(rs.root_count());
  }
}
BENCHMARK(BM_BuildRootSystemE8);

void BM_KacEnumerationE8(benchmark::State& state) {
  const exg::RootSystem& rs = exg::get_root_system(exg::E8);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto classes = exg::enumerate_kac(rs, r);
    benchmark::DoNotOptimize(classes.size());
  }
}
BENCHMARK(BM_KacEnumerationE8)->Arg(5)->Arg(13)->Arg(29);

void BM_BruteForceTorsionF4r5(benchmark::State& state) {
  const exg::RootSystem& rs = exg::get_root_system(exg::F4);
  for (auto _ : state) {
    auto summary = exg::brute_force_torsion(rs, 5);
    benchmark::DoNotOptimize(summary.max_class_dim);
  }
}
BENCHMARK(BM_BruteForceTorsionF4r5);

void BM_CatalogE8(benchmark::State& state) {
  for (auto _ : state) {
    auto catalog = exg::catalog_maximal(exg::E8, 0);
    benchmark::DoNotOptimize(catalog.size());
  }
}
BENCHMARK(BM_CatalogE8);

void BM_VerifyAlphaTables(benchmark::State& state) {
  for (auto _ : state) {
    auto checks = exg::verify_alpha_tables(2);
    benchmark::DoNotOptimize(checks.size());
  }
}
BENCHMARK(BM_VerifyAlphaTables);

}  // namespace

BENCHMARK_MAIN();
