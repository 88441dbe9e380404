#include <benchmark/benchmark.h>

#include "nctrace/enumerate.hpp"
#include "nctrace/oracle.hpp"
#include "nctrace/trace_engine.hpp"

using namespace nctrace;

namespace {

void BM_EnumerateNc(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    long count = 0;
    for (auto _ : state) {
        count = 0;
        for_each_noncrossing(p, [&](const PartitionView&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.counters["partitions"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateNc)->DenseRange(8, 12);

void BM_EnumeratePairings(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        for_each_noncrossing_pairing(p, [&](const PartitionView&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePairings)->Arg(12)->Arg(16);

void BM_TraceCumulantBrown(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const TraceWord w({{p, Star::plain}, {p, Star::star}});
    for (auto _ : state) {
        const CumulantReport r = trace_cumulant_brown(w);
        benchmark::DoNotOptimize(r.contributing_partitions);
    }
}
BENCHMARK(BM_TraceCumulantBrown)->DenseRange(3, 6);

void BM_AllPatternsBatch(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const Composition c(std::vector<int>(static_cast<size_t>(p), 1));
    for (auto _ : state) {
        const PatternValues v = trace_cumulant_brown_all_patterns(c);
        benchmark::DoNotOptimize(v.values.size());
    }
}
BENCHMARK(BM_AllPatternsBatch)->DenseRange(6, 10);

void BM_GeneralPath(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    BrownKernel kernel;
    const TraceWord w({{p, Star::plain}, {p, Star::star}});
    for (auto _ : state) {
        const LaurentPoly v =
            trace_cumulant_general(kernel, w.composition(), w.family_labels());
        benchmark::DoNotOptimize(v.is_zero());
    }
}
BENCHMARK(BM_GeneralPath)->DenseRange(3, 6);

void BM_OracleTraceMoment(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const TraceWord w({{p, Star::plain}, {p, Star::star}});
    for (auto _ : state) {
        // fresh oracle per iteration: measures the un-memoized path
        Oracle oracle;
        benchmark::DoNotOptimize(oracle.trace_moment(w, 3));
    }
}
BENCHMARK(BM_OracleTraceMoment)->DenseRange(1, 3);

void BM_OracleTraceCumulantMemoized(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const TraceWord w({{p, Star::plain}, {p, Star::star}});
    Oracle oracle;
    benchmark::DoNotOptimize(oracle.trace_cumulant(w, 3));
    for (auto _ : state) benchmark::DoNotOptimize(oracle.trace_cumulant(w, 3));
}
BENCHMARK(BM_OracleTraceCumulantMemoized)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
