#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drsop/instance_io.hpp"
#include "drsop/search.hpp"

namespace drsop {

/// A full benchmark: one instance, a ladder of scenarios, and global knobs.
struct BenchPlan {
    const ProblemSpace* instance = nullptr;
    std::vector<ScenarioSpec> scenarios;
    double budget_scale = 1.0; // multiplies every scenario budget
    int parallel_runs = 1;     // max concurrent (strategy, seed) runs
    StrategyParams params;
    // The exact scan ignores the budget but is stopped (and its row marked
    // incomplete) after this multiple of the scaled budget.
    std::int64_t fullscan_cap_factor = 10;
};

std::int64_t scaled_budget_ms(std::int64_t budget_ms, double scale);

/// One run per (strategy, seed) pair of the scenario, with the instance
/// restricted to the deployed services; reports come back in grid order
/// regardless of how runs were scheduled.
std::vector<RunReport> run_scenario(const BenchPlan& plan, const ScenarioSpec& scenario);

/// All scenarios of the plan, in order.
std::vector<RunReport> run_plan_rows(const BenchPlan& plan);

/// run_plan_rows serialized as the report CSV.
std::string run_plan(const BenchPlan& plan);

} // namespace drsop
