// Microbenchmarks for the hot paths: candidate evaluation (cache miss and
// hit), neighborhood enumeration, the exact scan, and one budgeted strategy
// run per family. Useful for recalibrating the virtual-time charges in
// core/src/clock.cpp when the evaluation path changes.

#include <benchmark/benchmark.h>

#include "drsop/exhaustive.hpp"
#include "drsop/fixtures.hpp"
#include "drsop/instance_io.hpp"
#include "drsop/search.hpp"

namespace {

using namespace drsop;

const ProblemSpace& paper_space() {
    static const ProblemSpace space = parse_instance(fixtures::paper_instance());
    return space;
}

std::vector<std::string> node_range(char last) {
    std::vector<std::string> ids;
    for (char c = 'A'; c <= last; ++c) ids.emplace_back(1, c);
    return ids;
}

void BM_EvaluateMiss(benchmark::State& state) {
    const ProblemSpace deployed =
        restrict_services(paper_space(), 1, state.range(0));
    SearchContext ctx(deployed, node_range('L'), 1, DeadlineClock::unlimited());
    Rng rng(7);
    Assignment mu = ctx.random_assignment(rng);
    std::size_t flip = 0;
    for (auto _ : state) {
        // A fresh encoding on almost every iteration.
        mu.placement[flip % mu.size()] =
            ctx.enabled()[rng.below(ctx.enabled().size())];
        ++flip;
        benchmark::DoNotOptimize(ctx.evaluate(mu));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EvaluateMiss)->Arg(20)->Arg(60);

void BM_EvaluateHit(benchmark::State& state) {
    const ProblemSpace deployed = restrict_services(paper_space(), 1, 60);
    SearchContext ctx(deployed, node_range('L'), 1, DeadlineClock::unlimited());
    const Assignment mu = ctx.start();
    ctx.evaluate(mu);
    for (auto _ : state) benchmark::DoNotOptimize(ctx.evaluate(mu));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EvaluateHit);

void BM_EnumerateNeighbors(benchmark::State& state) {
    const ProblemSpace& space = paper_space();
    const Assignment mu0 = initial_assignment(space);
    const auto enabled = node_range('L');
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_neighbors(space, mu0, enabled));
}
BENCHMARK(BM_EnumerateNeighbors);

void BM_FullScanTestOne(benchmark::State& state) {
    const ProblemSpace deployed = restrict_services(paper_space(), 1, 20);
    const auto enabled = node_range('D');
    for (auto _ : state) {
        SearchContext ctx(deployed, enabled, 1, DeadlineClock::unlimited());
        benchmark::DoNotOptimize(full_scan(ctx));
    }
}
BENCHMARK(BM_FullScanTestOne);

void BM_ExhaustiveEightServices(benchmark::State& state) {
    const ProblemSpace deployed = restrict_services(paper_space(), 1, 8);
    const auto enabled = node_range('D');
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_minimum(deployed, enabled));
}
BENCHMARK(BM_ExhaustiveEightServices);

void BM_StrategyBudgetedRun(benchmark::State& state) {
    const ProblemSpace deployed = restrict_services(paper_space(), 1, 20);
    const auto enabled = node_range('D');
    const Strategy strategy = static_cast<Strategy>(state.range(0));
    for (auto _ : state) {
        SearchContext ctx(deployed, enabled, 3,
                          DeadlineClock::for_budget(50, deployed.service_count(),
                                                    deployed.resource_count()));
        benchmark::DoNotOptimize(run_strategy(strategy, ctx, {}));
    }
    state.SetLabel(std::string(to_string(strategy)));
}
BENCHMARK(BM_StrategyBudgetedRun)
    ->Arg(static_cast<int>(Strategy::Greedy))
    ->Arg(static_cast<int>(Strategy::Tabu))
    ->Arg(static_cast<int>(Strategy::Sa))
    ->Arg(static_cast<int>(Strategy::Ga))
    ->Arg(static_cast<int>(Strategy::SgaTabu));

} // namespace

int main(int argc, char* argv[]) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
