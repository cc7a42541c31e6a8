// Serial reference kernels against their OpenMP counterparts.

#include "adm/builtin_problems.hpp"
#include "adm/error_table.hpp"
#include "adm/parallel.hpp"
#include "adm/verification.hpp"

#include <benchmark/benchmark.h>

namespace {

struct Fixture {
    adm::Problem problem = adm::builtin_problem(1, 0.5, 3.5);
    adm::GPSeries psi = adm::solve(problem, 10).psi;
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

void BM_max_error_serial(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(adm::max_error_serial(f.psi, *f.problem.exact, state.range(0)).max_error);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_max_error_parallel(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(adm::max_error(f.psi, *f.problem.exact, state.range(0)).max_error);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_residual_serial(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(adm::residual_serial(f.psi, f.problem, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_residual_parallel(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(adm::residual(f.psi, f.problem, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

adm::TableRequest table_request() {
    adm::TableRequest req;
    req.example = 3;
    req.betas = {1.0, 2.5};
    return req;
}

void BM_table_serial(benchmark::State& state) {
    const adm::TableRequest req = table_request();
    for (auto _ : state) benchmark::DoNotOptimize(adm::compute_table_serial(req).cells.size());
}

void BM_table_parallel(benchmark::State& state) {
    const adm::TableRequest req = table_request();
    for (auto _ : state) benchmark::DoNotOptimize(adm::compute_table(req).cells.size());
    state.counters["threads"] = adm::max_threads();
}

} // namespace

BENCHMARK(BM_max_error_serial)->Arg(1000)->Arg(100000);
BENCHMARK(BM_max_error_parallel)->Arg(1000)->Arg(100000);
BENCHMARK(BM_residual_serial)->Arg(1000)->Arg(100000);
BENCHMARK(BM_residual_parallel)->Arg(1000)->Arg(100000);
BENCHMARK(BM_table_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
