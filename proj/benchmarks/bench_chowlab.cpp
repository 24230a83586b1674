#include <benchmark/benchmark.h>

#include "chowlab/characters.hpp"
#include "chowlab/chow_geometry.hpp"
#include "chowlab/exactla.hpp"
#include "chowlab/foulkes_howe.hpp"
#include "chowlab/veronese_tor.hpp"

using namespace chowlab;

static void BM_FHMatrix(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0)), m = static_cast<int>(st.range(1));
  for (auto _ : st) {
    auto fh = fh_matrix(d, 2, m);
    benchmark::DoNotOptimize(fh.matrix.nonzeros());
  }
}
BENCHMARK(BM_FHMatrix)->Args({2, 3})->Args({3, 3})->Args({4, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_RankExact(benchmark::State& st) {
  const auto fh = fh_matrix(static_cast<int>(st.range(0)), 2, static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(rank_exact(fh.matrix));
  st.counters["cols"] = static_cast<double>(fh.matrix.cols());
}
BENCHMARK(BM_RankExact)->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_RankModP(benchmark::State& st) {
  const auto fh = fh_matrix(4, 2, static_cast<int>(st.range(0)));
  const std::uint64_t p = 1152921504606846883ULL;  // 2^60 - 93
  for (auto _ : st) benchmark::DoNotOptimize(rank_mod_p(fh.matrix, p));
  st.counters["cols"] = static_cast<double>(fh.matrix.cols());
}
BENCHMARK(BM_RankModP)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Plethysm(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0)), d = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(schur_decompose(sym_of_sym_char(m, d, 3)).terms.size());
}
BENCHMARK(BM_Plethysm)->Args({3, 3})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_ComplexChecks(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(complex_checks(1).generic_rank);
}
BENCHMARK(BM_ComplexChecks)->Unit(benchmark::kMillisecond);

static void BM_KoszulTor(benchmark::State& st) {
  const auto ring = GradedRingSpec::polynomial_ring(3);
  for (auto _ : st) benchmark::DoNotOptimize(koszul_tor_dim(ring, static_cast<int>(st.range(0)), 1, 2));
}
BENCHMARK(BM_KoszulTor)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
