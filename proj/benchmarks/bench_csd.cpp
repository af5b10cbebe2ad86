#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "csd/flag_builder.hpp"
#include "csd/simplex_tree.hpp"
#include "csd_cli/io.hpp"

using namespace csd;

namespace {

constexpr double kRmax = 0.4;

const WeightedGraph& klein_graph(Level t) {
  static std::map<Level, WeightedGraph> cache;
  auto it = cache.find(t);
  if (it == cache.end()) {
    it = cache.emplace(t, cli::rips_graph(cli::klein_bottle(300, 3), kRmax, t)).first;
  }
  return it->second;
}

// Queries: half drawn from the complex, half random triples that mostly miss.
std::vector<Simplex> probes(const CriticalSimplexDiagram& d, std::size_t count) {
  std::mt19937_64 rng(1);
  std::vector<Simplex> all;
  for (const auto& [label, star] : d.stars()) all.push_back(star.simplex);
  std::vector<Simplex> out;
  std::uniform_int_distribution<Vertex> vertex(1, static_cast<Vertex>(d.vertex_count()));
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      const Simplex& s = all[rng() % all.size()];
      out.push_back(s.size() > 1 ? s.without_index(rng() % s.size()) : s);
    } else {
      Vertex a = vertex(rng), b = vertex(rng), c = vertex(rng);
      if (a == b || b == c || a == c) out.push_back(Simplex{a});
      else out.push_back(Simplex{a, b, c});
    }
  }
  return out;
}

void BM_BuildCsd(benchmark::State& state) {
  const Level t = static_cast<Level>(state.range(0));
  const auto& g = klein_graph(t);
  for (auto _ : state) benchmark::DoNotOptimize(build_flag(g, t));
  state.counters["nodes"] = static_cast<double>(build_flag(g, t).node_count());
}

void BM_BuildSimplexTree(benchmark::State& state) {
  const Level t = static_cast<Level>(state.range(0));
  const auto d = build_flag(klein_graph(t), t);
  for (auto _ : state) benchmark::DoNotOptimize(expand(d));
  state.counters["nodes"] = static_cast<double>(expand(d).node_count());
}

void BM_MembershipCsd(benchmark::State& state) {
  const Level t = static_cast<Level>(state.range(0));
  const auto d = build_flag(klein_graph(t), t);
  const auto qs = probes(d, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(d.contains(qs[i++ % qs.size()]));
}

void BM_MembershipSimplexTree(benchmark::State& state) {
  const Level t = static_cast<Level>(state.range(0));
  const auto d = build_flag(klein_graph(t), t);
  const auto st = expand(d);
  const auto qs = probes(d, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(st.contains(qs[i++ % qs.size()]));
}

void BM_FiltrationCsd(benchmark::State& state) {
  const Level t = static_cast<Level>(state.range(0));
  const auto d = build_flag(klein_graph(t), t);
  const auto qs = probes(d, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(d.find_filtration(qs[i++ % qs.size()]));
}

void BM_FiltrationSimplexTree(benchmark::State& state) {
  const Level t = static_cast<Level>(state.range(0));
  const auto st = expand(build_flag(klein_graph(t), t));
  const auto qs = probes(build_flag(klein_graph(t), t), 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(st.find(qs[i++ % qs.size()]));
}

void BM_InsertCsd(benchmark::State& state) {
  // Insert a fresh maximal simplex over new vertices, then remove it again.
  const Level t = static_cast<Level>(state.range(0));
  const auto& g = klein_graph(t);
  auto d = build_flag(g, t);
  const Simplex s{1, 50, 100, 150, 200};
  for (auto _ : state) {
    if (d.contains(s)) d.remove(s);
    else d.insert(s, t);
  }
}

void BM_InsertSimplexTree(benchmark::State& state) {
  const Level t = static_cast<Level>(state.range(0));
  const auto d = build_flag(klein_graph(t), t);
  const Simplex s{1, 50, 100, 150, 200};
  for (auto _ : state) {
    state.PauseTiming();
    SimplexTree st = expand(d);
    state.ResumeTiming();
    st.insert(s, t);
    benchmark::DoNotOptimize(st);
  }
}

}  // namespace

BENCHMARK(BM_BuildCsd)->RangeMultiplier(4)->Range(1, 64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildSimplexTree)->RangeMultiplier(4)->Range(1, 64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MembershipCsd)->Arg(64);
BENCHMARK(BM_MembershipSimplexTree)->Arg(64);
BENCHMARK(BM_FiltrationCsd)->Arg(64);
BENCHMARK(BM_FiltrationSimplexTree)->Arg(64);
BENCHMARK(BM_InsertCsd)->Arg(64);
BENCHMARK(BM_InsertSimplexTree)->Arg(64)->Iterations(50);

BENCHMARK_MAIN();
