#include "dpchroma/chromatic.hpp"
#include "dpchroma/corpus.hpp"
#include "dpchroma/counting.hpp"
#include "dpchroma/cover_enum.hpp"
#include "dpchroma/dp_function.hpp"

#include <benchmark/benchmark.h>

#include <memory>

namespace {

using namespace dpchroma;

std::shared_ptr<const Graph> named(const char* spec) {
    return std::make_shared<const Graph>(make_named_graph(spec));
}

void BM_whitney_cone_c5(benchmark::State& state) {
    const Graph g = make_named_graph("cone:C5");
    for (auto _ : state) benchmark::DoNotOptimize(whitney_expansion(g));
}
BENCHMARK(BM_whitney_cone_c5);

void BM_whitney_k5(benchmark::State& state) {
    const Graph g = make_named_graph("K5");
    for (auto _ : state) benchmark::DoNotOptimize(whitney_expansion(g));
}
BENCHMARK(BM_whitney_k5);

void BM_count_colorings_w4(benchmark::State& state) {
    const auto fold = static_cast<int>(state.range(0));
    const DPCover c = canonical_cover(named("W4"), fold);
    for (auto _ : state) benchmark::DoNotOptimize(count_colorings(c));
}
BENCHMARK(BM_count_colorings_w4)->Arg(4)->Arg(8);

void BM_inclusion_exclusion_w4(benchmark::State& state) {
    const DPCover c = canonical_cover(named("W4"), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(inclusion_exclusion_count(c));
}
BENCHMARK(BM_inclusion_exclusion_w4)->Arg(8)->Arg(32);

void BM_orbit_enumeration_w4(benchmark::State& state) {
    const auto g = named("W4");
    for (auto _ : state) {
        CoverEnumerator covers(g, static_cast<int>(state.range(0)), /*reduce=*/true);
        std::uint64_t n = 0;
        while (covers.next()) ++n;
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_orbit_enumeration_w4)->Arg(3)->Arg(4);

void BM_dp_min_c4(benchmark::State& state) {
    const auto g = named("C4");
    DpOptions options;
    for (auto _ : state) benchmark::DoNotOptimize(dp_color_function(g, static_cast<int>(state.range(0)), options));
}
BENCHMARK(BM_dp_min_c4)->Arg(4)->Arg(5);

void BM_dp_min_glue3(benchmark::State& state) {
    const auto g = named("glue:3");
    DpOptions options;
    options.jobs = 2;
    for (auto _ : state) benchmark::DoNotOptimize(dp_color_function(g, static_cast<int>(state.range(0)), options));
}
BENCHMARK(BM_dp_min_glue3)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
