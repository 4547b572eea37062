#include <benchmark/benchmark.h>

#include <random>

#include "nulab/families.hpp"
#include "nulab/inequality.hpp"
#include "nulab/nuk_exact.hpp"
#include "nulab/nuk_poly.hpp"
#include "nulab/structure.hpp"

namespace fam = nulab::families;

namespace {

void BM_NuK(benchmark::State& state, nulab::MultiGraph (*make)(), int k) {
  const auto g = make();
  for (auto _ : state) benchmark::DoNotOptimize(nulab::nu_k(g, k).value);
}

nulab::MultiGraph petersen_triangle() { return fam::triangle_replace(fam::petersen()); }

BENCHMARK_CAPTURE(BM_NuK, petersen_k3, fam::petersen, 3);
BENCHMARK_CAPTURE(BM_NuK, sylvester10_k2, fam::sylvester10, 2);
BENCHMARK_CAPTURE(BM_NuK, fig5_k2, fam::fig5_graph28, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NuK, fig5_k3, fam::fig5_graph28, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NuK, petersen_triangle_k3, petersen_triangle, 3)->Unit(benchmark::kMillisecond);

void BM_PlainSearch(benchmark::State& state) {
  const auto g = fam::petersen();
  const nulab::SolverOptions plain{false, false, false, false};
  for (auto _ : state) benchmark::DoNotOptimize(nulab::nu_k(g, static_cast<int>(state.range(0)), plain).value);
}
BENCHMARK(BM_PlainSearch)->DenseRange(2, 4);

void BM_UnicyclicPoly(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto g = fam::random_unicyclic(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(nulab::poly::nu_k_unicyclic(g, 3));
}
BENCHMARK(BM_UnicyclicPoly)->RangeMultiplier(4)->Range(16, 1024);

void BM_Profile(benchmark::State& state) {
  const auto g = fam::fig3_graph12();
  for (auto _ : state) benchmark::DoNotOptimize(nulab::compute_profile(g));
}
BENCHMARK(BM_Profile)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const auto g = fam::string_replace(fam::triangle_replace(fam::petersen()), 0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(nulab::oum_decompose(g).diamond_count());
}
BENCHMARK(BM_Decompose);

}  // namespace

BENCHMARK_MAIN();
