#include <benchmark/benchmark.h>

#include "prext/contraction.hpp"
#include "prext/detect.hpp"
#include "prext/enumerate.hpp"
#include "prext/harness.hpp"
#include "prext/solve.hpp"

using namespace prext;

namespace {

Graph fixture_graph(int n, std::uint64_t seed) {
  return sample_any(n, 1, seed).graphs.front();
}

void BM_FindOddHole(benchmark::State& state) {
  const Graph g = fixture_graph(static_cast<int>(state.range(0)), 99);
  for (auto _ : state) {
    auto w = find_hole(g, HoleParity::odd);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_FindOddHole)->Arg(10)->Arg(12)->Arg(14)->Arg(16);

void BM_IsMeyniel(benchmark::State& state) {
  const Graph g = fixture_graph(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    auto r = is_meyniel(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_IsMeyniel)->Arg(10)->Arg(12)->Arg(14);

void BM_IsArtemis(benchmark::State& state) {
  const Graph g = fixture_graph(static_cast<int>(state.range(0)), 15);
  for (auto _ : state) {
    auto r = is_artemis(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_IsArtemis)->Arg(9)->Arg(11)->Arg(13);

void BM_MaxClique(benchmark::State& state) {
  const Graph g = fixture_graph(static_cast<int>(state.range(0)), 31);
  for (auto _ : state) {
    auto c = max_clique(g);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_MaxClique)->Arg(20)->Arg(30)->Arg(40);

void BM_ChromaticNumber(benchmark::State& state) {
  const Graph g = fixture_graph(static_cast<int>(state.range(0)), 63);
  for (auto _ : state) {
    auto k = chromatic_number(g);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_ChromaticNumber)->Arg(12)->Arg(16)->Arg(20);

void BM_Cocontract(benchmark::State& state) {
  const Graph g = fixture_graph(12, 47);
  // A fixed small clique family: the lexicographically first edge as one
  // class plus two singletons.
  CliqueFamily q;
  for (Vertex u = 0; u < 12 && q.size() == 0; ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      VertexSet rest = g.vertices() - VertexSet{u, v};
      q = CliqueFamily({VertexSet{u, v}, VertexSet{rest.min()}});
      break;
    }
  for (auto _ : state) {
    auto res = cocontract(g, q);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_Cocontract);

void BM_CliqueFamilySweep(benchmark::State& state) {
  const Graph g = fixture_graph(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    std::uint64_t families = 0;
    for_each_clique_family(g, [&](const CliqueFamily&) {
      ++families;
      return true;
    });
    benchmark::DoNotOptimize(families);
  }
}
BENCHMARK(BM_CliqueFamilySweep)->Arg(6)->Arg(8);

void BM_PrextOptimize(benchmark::State& state) {
  const Graph g = fixture_graph(static_cast<int>(state.range(0)), 77);
  const StableFamily q({VertexSet{g.vertices().min()}});
  for (auto _ : state) {
    auto ans = prext_optimize(g, q);
    benchmark::DoNotOptimize(ans);
  }
}
BENCHMARK(BM_PrextOptimize)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
