#include <drc/config.hpp>
#include <drc/evaluation.hpp>
#include <drc/objective.hpp>

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

drc::DroProblem problem_with(std::size_t n)
{
    drc::RunConfig cfg;
    cfg.n_samples = n;
    const auto setup = cfg.benchmark_setup();
    auto train = drc::generate_quality_samples(cfg.synthetic(), 0).train;
    return {std::move(train), setup.profile, setup.params, drc::AmbiguityConfig::derived(setup.support, setup.tau, n),
            setup.inner};
}

const std::vector<double> kLatencies{1, 2, 4, 6, 9, 11, 14, 15};

void BM_ObjectiveSerial(benchmark::State& state)
{
    const auto p = problem_with(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(drc::objective_serial(p, kLatencies, 0.008));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ObjectiveParallel(benchmark::State& state)
{
#ifdef _OPENMP
    omp_set_num_threads(static_cast<int>(state.range(1)));
#endif
    const auto p = problem_with(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(drc::objective_parallel(p, kLatencies, 0.008));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_ObjectiveSerial)->RangeMultiplier(4)->Range(200, 12800);
BENCHMARK(BM_ObjectiveParallel)->ArgsProduct({{200, 800, 3200, 12800}, {1, 2, 4}})->UseRealTime();

BENCHMARK_MAIN();
