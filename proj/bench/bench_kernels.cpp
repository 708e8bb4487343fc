// parallel kernels against their serial references
#include <benchmark/benchmark.h>

#include <random>

#include "hadamard/binary_code.hpp"
#include "hadamard/clique.hpp"
#include "hadamard/fixtures.hpp"

using namespace hadamard;

namespace {

std::vector<Word> random_words(std::size_t count, int n) {
  std::mt19937_64 rng(7);
  std::vector<Word> w(count);
  for (auto& x : w) x = rng() & low_mask(n);
  return w;
}

template <auto Kernel>
void BM_distance_pairs(benchmark::State& st) {
  auto w = random_words(static_cast<std::size_t>(st.range(0)), 32);
  for (auto _ : st) benchmark::DoNotOptimize(Kernel(w, 32));
  st.SetItemsProcessed(st.iterations() * st.range(0) * (st.range(0) - 1) / 2);
}

template <auto Kernel>
void BM_mate_candidates(benchmark::State& st) {
  SignMatrix h = fixture_matrix(st.range(0) == 20 ? "H20_1" : "H16");
  for (auto _ : st)
    for (int part = 0; part < 4; ++part) benchmark::DoNotOptimize(Kernel(h, {2, 6}, part));
}

template <auto Kernel>
void BM_max_clique(benchmark::State& st) {
  // 0: order 12 with {2,6}, 880 vertices; 1: order 16 with {2,14}
  MateGraph g = st.range(0) == 0 ? build_mate_graph(fixture_matrix("H12"), std::array<int, 2>{2, 6})
                                 : build_mate_graph(fixture_matrix("H16"), std::array<int, 2>{2, 14});
  for (auto _ : st) benchmark::DoNotOptimize(Kernel(g.adj, kDefaultCliqueBudget).size);
  st.counters["vertices"] = static_cast<double>(g.size());
}

}  // namespace

BENCHMARK(BM_distance_pairs<distance_pair_counts>)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_distance_pairs<distance_pair_counts_serial>)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mate_candidates<mate_candidates>)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mate_candidates<mate_candidates_serial>)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_clique<max_clique>)->Arg(0)->Arg(1)->Iterations(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_clique<max_clique_serial>)->Arg(0)->Arg(1)->Iterations(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
