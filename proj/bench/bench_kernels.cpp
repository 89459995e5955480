// Serial reference kernels against their OpenMP counterparts.
// The second argument of each parallel benchmark is the thread count.

#include <prs/enumerate.hpp>
#include <prs/extremal.hpp>
#include <prs/graph.hpp>
#include <prs/membership.hpp>
#include <prs/saturation.hpp>

#include <benchmark/benchmark.h>

using namespace prs;

namespace
{
    void membership_serial(benchmark::State & state)
    {
        Graph g = complete_graph(static_cast<int>(state.range(0))), h = complete_graph(4);
        for (auto _ : state)
            benchmark::DoNotOptimize(find_rainbow_free_colouring_serial(g, h).status);
    }

    void membership_parallel(benchmark::State & state)
    {
        Graph g = complete_graph(static_cast<int>(state.range(0))), h = complete_graph(4);
        Budget b;
        b.threads = static_cast<int>(state.range(1));
        for (auto _ : state)
            benchmark::DoNotOptimize(find_rainbow_free_colouring(g, h, b).status);
    }

    void enumeration_serial(benchmark::State & state)
    {
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_graphs_serial(7, static_cast<int>(state.range(0))).size());
    }

    void enumeration_parallel(benchmark::State & state)
    {
        EnumerationOptions o;
        o.threads = static_cast<int>(state.range(1));
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_graphs(7, static_cast<int>(state.range(0)), o).size());
    }

    void scan_serial(benchmark::State & state)
    {
        Graph h = disjoint_union(complete_graph(2), complete_graph(2));
        for (auto _ : state)
            benchmark::DoNotOptimize(exact_number_serial(SaturationKind::prsat, 6, h).value);
    }

    void scan_parallel(benchmark::State & state)
    {
        Graph h = disjoint_union(complete_graph(2), complete_graph(2));
        ExtremalOptions o;
        o.budget.threads = static_cast<int>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(exact_number(SaturationKind::prsat, 6, h, o).value);
    }

    auto k4_saturated_seven() -> Graph
    {
        // K_2 joined to K_4 u K_1
        return join(complete_graph(2), disjoint_union(complete_graph(4), empty_graph(1)));
    }

    void saturation_serial(benchmark::State & state)
    {
        Graph g = k4_saturated_seven(), h = complete_graph(4);
        for (auto _ : state)
            benchmark::DoNotOptimize(is_properly_rainbow_saturated_serial(g, h).holds);
    }

    void saturation_parallel(benchmark::State & state)
    {
        Graph g = k4_saturated_seven(), h = complete_graph(4);
        SaturationOptions o;
        o.budget.threads = static_cast<int>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(is_properly_rainbow_saturated(g, h, o).holds);
    }
}

BENCHMARK(membership_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(membership_parallel)->ArgsProduct({{6, 7}, {2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(enumeration_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(enumeration_parallel)->ArgsProduct({{8, 10}, {2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_parallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(saturation_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(saturation_parallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
