#include <benchmark/benchmark.h>

#include "ordwb/harness.hpp"
#include "ordwb/order.hpp"
#include "ordwb/systems.hpp"

using namespace ordwb;

namespace {

HarnessOptions opts(std::int64_t maxlen, bool parallel) {
    HarnessOptions o;
    o.budget.maxlen = static_cast<std::uint64_t>(maxlen);
    o.exec = parallel ? Exec::Parallel : Exec::Serial;
    o.trials = 100;
    return o;
}

void BM_Enumerate(benchmark::State& st) {
    Budget b;
    b.maxlen = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) {
        clear_caches();
        benchmark::DoNotOptimize(enumerate(SystemId::pi11(), b));
    }
}

void BM_Compare(benchmark::State& st) {
    Budget b;
    b.maxlen = 5;
    auto u = enumerate(SystemId::stab(), b);
    for (auto _ : st) {
        clear_caches();
        int acc = 0;
        for (auto& x : u)
            for (auto& y : u)
                acc += cmp(x, y);
        benchmark::DoNotOptimize(acc);
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(u.size() * u.size()));
}

void BM_Suite(benchmark::State& st, const char* suite, SystemId sys) {
    const bool parallel = st.range(1) != 0;
    for (auto _ : st) {
        clear_caches();
        Report r = run_suite(suite, sys, opts(st.range(0), parallel));
        benchmark::DoNotOptimize(r.failure_count);
    }
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compare)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, linear_pi11, "linear", SystemId::pi11())
    ->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, collapse_pi11, "collapse", SystemId::pi11())
    ->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, descent_bh, "descent", SystemId::bh())
    ->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
