#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drsop/bench.hpp"
#include "drsop/fixtures.hpp"
#include "test_support.hpp"

using namespace drsop;
using namespace drsop::testing;

namespace {

ScenarioSpec mini_scenario(std::string name, std::vector<Strategy> strategies,
                           std::vector<std::uint64_t> seeds, std::int64_t budget_ms = 30'000) {
    ScenarioSpec sc;
    sc.name = std::move(name);
    sc.first_service = 1;
    sc.last_service = 20;
    sc.enabled_nodes = {"A", "B", "C", "D"};
    sc.budget_ms = budget_ms;
    sc.strategies = std::move(strategies);
    sc.seeds = std::move(seeds);
    return sc;
}

std::vector<RunReport> strip_wall(std::vector<RunReport> rows) {
    for (auto& r : rows) r.wall_ms = 0;
    return rows;
}

} // namespace

TEST_CASE("run_scenario emits one report per strategy-seed pair") {
    const ProblemSpace space = parse_instance(fixtures::paper_instance());
    BenchPlan plan;
    plan.instance = &space;
    plan.budget_scale = 0.001; // 30 ms per run

    const auto rows = run_scenario(plan, mini_scenario("t", {Strategy::Greedy}, {1, 2, 3}));
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].scenario == "t");
        CHECK(rows[i].strategy == Strategy::Greedy);
        CHECK(rows[i].seed == i + 1);
        CHECK(rows[i].feasibility_checks == rows[i].unique_candidates);
        CHECK(rows[i].cache_hits == rows[i].candidates_examined - rows[i].feasibility_checks);
    }
}

TEST_CASE("a plan without scenarios yields a header-only CSV") {
    const ProblemSpace space = parse_instance(fixtures::paper_instance());
    BenchPlan plan;
    plan.instance = &space;
    const std::string csv = run_plan(plan);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);
}

TEST_CASE("scenario validation happens before any run") {
    const ProblemSpace space = parse_instance(fixtures::paper_tables_instance());
    BenchPlan plan;
    plan.instance = &space;
    ScenarioSpec sc = mini_scenario("t", {Strategy::Greedy}, {1});
    sc.enabled_nodes = {"A", "I"}; // I undefined in the measured-rows fixture
    CHECK_THROWS_AS(run_scenario(plan, sc), InputError);
    CHECK_THROWS_AS(run_plan({}), InputError); // no instance
}

TEST_CASE("rerunning a plan reproduces every column except wall_ms") {
    const ProblemSpace space = parse_instance(fixtures::paper_instance());
    BenchPlan plan;
    plan.instance = &space;
    plan.budget_scale = 0.002;
    plan.scenarios = {
        mini_scenario("Block 1", {Strategy::Tabu, Strategy::Sa}, {1, 2}),
        mini_scenario("Block 2", {Strategy::SgaGreedy}, {5}),
    };

    const auto first = strip_wall(run_plan_rows(plan));
    const auto second = strip_wall(run_plan_rows(plan));
    CHECK(first == second);

    // Scenario blocks appear in plan order.
    REQUIRE(first.size() == 5);
    CHECK(first[0].scenario == "Block 1");
    CHECK(first[4].scenario == "Block 2");
}

TEST_CASE("parallel execution changes nothing but wall_ms") {
    const ProblemSpace space = parse_instance(fixtures::paper_instance());
    BenchPlan plan;
    plan.instance = &space;
    plan.budget_scale = 0.002;
    plan.scenarios = {mini_scenario("t", {Strategy::Greedy, Strategy::Ga, Strategy::Sa},
                                    {3, 4})};

    plan.parallel_runs = 1;
    const auto serial = strip_wall(run_plan_rows(plan));
    plan.parallel_runs = 4;
    const auto parallel = strip_wall(run_plan_rows(plan));
    CHECK(serial == parallel);
}

TEST_CASE("non-exact runs respect the scaled budget") {
    const ProblemSpace space = parse_instance(fixtures::paper_instance());
    BenchPlan plan;
    plan.instance = &space;
    plan.budget_scale = 0.01; // 300 ms per run

    const auto rows =
        run_scenario(plan, mini_scenario("t", {Strategy::Greedy, Strategy::Sa}, {1}));
    for (const auto& r : rows) {
        CHECK(r.wall_ms <= 300 + 250);
        CHECK_FALSE(r.incomplete);
    }
}

TEST_CASE("a capped exact scan reports an incomplete row") {
    const ProblemSpace space = parse_instance(fixtures::paper_instance());
    BenchPlan plan;
    plan.instance = &space;
    plan.budget_scale = 0.0001;

    ScenarioSpec sc;
    sc.name = "hard";
    sc.first_service = 1;
    sc.last_service = 40;
    sc.enabled_nodes = {"A", "B", "C", "D", "E", "F", "G", "H"};
    sc.budget_ms = 10'000; // scaled to 1 ms; the scan needs far more
    sc.strategies = {Strategy::FullScan};
    sc.seeds = {1};

    const auto rows = run_scenario(plan, sc);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].incomplete);
}

TEST_CASE("the exact scan's row dominates the heuristics in its scenario") {
    const ProblemSpace space = parse_instance(fixtures::paper_instance());
    BenchPlan plan;
    plan.instance = &space;
    plan.budget_scale = 0.01;

    const auto rows = run_scenario(
        plan, mini_scenario("t", {Strategy::FullScan, Strategy::Greedy, Strategy::Tabu}, {1, 2}));
    std::optional<Cost> scan_best;
    for (const auto& r : rows)
        if (r.strategy == Strategy::FullScan && r.best_cost)
            scan_best = scan_best ? std::min(*scan_best, *r.best_cost) : *r.best_cost;
    REQUIRE(scan_best.has_value());
    for (const auto& r : rows)
        if (r.best_cost) CHECK(*r.best_cost >= *scan_best);
}
