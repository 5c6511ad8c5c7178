// Serial reference kernels vs. their OpenMP counterparts on G(n, m) graphs.
// Run with --benchmark_filter=... to pick a kernel; the thread count of the
// parallel variants follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <map>
#include <numeric>

#include "chaingraph/kernels.hpp"
#include "chaingraph/random_baseline.hpp"

using namespace chaingraph;

namespace {

const SimpleGraph& graph_for(std::int64_t n) {
    static std::map<std::int64_t, SimpleGraph> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, gnm_random_graph({std::uint64_t(n), std::uint64_t(5 * n), 42})).first;
    return it->second;
}

std::vector<NodeId> first_sources(const SimpleGraph& g, std::size_t k) {
    std::vector<NodeId> s(std::min(k, g.node_count()));
    std::iota(s.begin(), s.end(), NodeId{0});
    return s;
}

template <auto Kernel>
void triangles(benchmark::State& state) {
    const auto& g = graph_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
    state.counters["edges"] = double(g.edge_count());
}

template <auto Kernel>
void bfs(benchmark::State& state) {
    const auto& g = graph_for(state.range(0));
    auto sources = first_sources(g, 256);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, sources));
    state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(sources.size()));
}

}  // namespace

BENCHMARK(triangles<kernels::serial::triangles_per_node>)->Name("triangles/serial")->Arg(10'000)->Arg(100'000);
BENCHMARK(triangles<kernels::parallel::triangles_per_node>)->Name("triangles/parallel")->Arg(10'000)->Arg(100'000);
BENCHMARK(bfs<kernels::serial::bfs_from_sources>)->Name("bfs/serial")->Arg(10'000)->Arg(100'000);
BENCHMARK(bfs<kernels::parallel::bfs_from_sources>)->Name("bfs/parallel")->Arg(10'000)->Arg(100'000);

BENCHMARK_MAIN();
