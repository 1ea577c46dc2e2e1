#include "drsop/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace drsop {

namespace {

RunReport execute_run(const BenchPlan& plan, const ScenarioSpec& scenario,
                      const ProblemSpace& deployed, Strategy strategy,
                      std::uint64_t seed, std::int64_t budget_ms) {
    const std::int64_t run_budget =
        strategy == Strategy::FullScan ? budget_ms * plan.fullscan_cap_factor : budget_ms;
    SearchContext ctx(deployed, scenario.enabled_nodes, seed,
                      DeadlineClock::for_budget(run_budget, deployed.service_count(),
                                                deployed.resource_count()));

    const auto started = std::chrono::steady_clock::now();
    const SearchOutcome outcome = run_strategy(strategy, ctx, plan.params);
    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();

    RunReport r;
    r.scenario = scenario.name;
    r.strategy = strategy;
    r.seed = seed;
    if (outcome.stable_found) r.best_cost = outcome.best_cost;
    r.stable = outcome.stable_found;
    r.restarts = outcome.stats.restarts;
    r.candidates_examined = outcome.stats.candidates_examined;
    r.unique_candidates = outcome.stats.unique_candidates;
    r.feasibility_checks = outcome.stats.feasibility_checks;
    r.cache_hits = outcome.stats.cache_hits;
    r.wall_ms = wall;
    r.incomplete = outcome.truncated;
    return r;
}

} // namespace

std::int64_t scaled_budget_ms(std::int64_t budget_ms, double scale) {
    if (scale <= 0.0) throw InputError("budget scale must be positive");
    const auto scaled = std::llround(static_cast<double>(budget_ms) * scale);
    return scaled < 1 ? 1 : scaled;
}

std::vector<RunReport> run_scenario(const BenchPlan& plan, const ScenarioSpec& scenario) {
    if (!plan.instance) throw InputError("bench plan has no instance");
    if (plan.parallel_runs < 1) throw InputError("parallel_runs must be >= 1");

    // Fail before any run starts if the scenario references unknown nodes.
    resolve_enabled_nodes(*plan.instance, scenario.enabled_nodes);

    const ProblemSpace deployed =
        restrict_services(*plan.instance, scenario.first_service, scenario.last_service);
    const std::int64_t budget_ms = scaled_budget_ms(scenario.budget_ms, plan.budget_scale);

    struct Task {
        Strategy strategy;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (Strategy strategy : scenario.strategies)
        for (std::uint64_t seed : scenario.seeds) tasks.push_back({strategy, seed});

    std::vector<RunReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                reports[i] = execute_run(plan, scenario, deployed, tasks[i].strategy,
                                         tasks[i].seed, budget_ms);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const auto pool_size = std::min<std::size_t>(
        static_cast<std::size_t>(plan.parallel_runs), std::max<std::size_t>(tasks.size(), 1));
    if (pool_size <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(pool_size);
        for (std::size_t i = 0; i < pool_size; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return reports;
}

std::vector<RunReport> run_plan_rows(const BenchPlan& plan) {
    if (!plan.instance) throw InputError("bench plan has no instance");
    std::vector<RunReport> rows;
    for (const ScenarioSpec& scenario : plan.scenarios) {
        auto part = run_scenario(plan, scenario);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    return rows;
}

std::string run_plan(const BenchPlan& plan) { return write_report(run_plan_rows(plan)); }

} // namespace drsop
