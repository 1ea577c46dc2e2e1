#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drsop/model.hpp"
#include "drsop/strategy_id.hpp"

namespace drsop {

/// One benchmark scenario: which services are deployed, which nodes accept
/// placements, the per-run time budget, and the strategy/seed grid.
struct ScenarioSpec {
    std::string name;
    std::int64_t first_service = 0;
    std::int64_t last_service = 0; // inclusive
    std::vector<std::string> enabled_nodes;
    std::int64_t budget_ms = 0;
    std::vector<Strategy> strategies;
    std::vector<std::uint64_t> seeds;

    bool operator==(const ScenarioSpec&) const = default;
};

/// One row of benchmark output. Counter identities hold on every run:
/// unique_candidates == feasibility_checks and
/// cache_hits == candidates_examined - feasibility_checks.
struct RunReport {
    std::string scenario;
    Strategy strategy = Strategy::Greedy;
    std::uint64_t seed = 0;
    std::optional<Cost> best_cost; // absent: no stable solution found
    bool stable = false;
    std::int64_t restarts = 0;
    std::int64_t candidates_examined = 0;
    std::int64_t unique_candidates = 0;
    std::int64_t feasibility_checks = 0;
    std::int64_t cache_hits = 0;
    std::int64_t wall_ms = 0;
    bool incomplete = false; // capped exhaustive run stopped before proving optimality

    bool operator==(const RunReport&) const = default;
};

/// Instance grammar (line-oriented UTF-8, '#' comments, whitespace-separated):
///   resources <name1> ... <nameD>                      exactly once, first
///   node <id> <level1> ... <levelD>
///   service <id> <initial-node> <migration-cost> <level1> ... <levelD>
/// An initial node the document never defines is accepted; the service
/// becomes homeless-eligible and is resolved when a run picks its node set.
ProblemSpace parse_instance(std::string_view text);

/// Writer counterpart of parse_instance; parse(write(space)) == space.
std::string write_instance(const ProblemSpace& space);

/// Scenario grammar, one block per scenario:
///   scenario <name>
///   services <first>..<last>
///   nodes <id> ...
///   budget_ms <int>
///   strategies <id> ...        optional; default: all heuristics
///   seeds <int> ...            optional; default: 1..20
std::vector<ScenarioSpec> parse_scenarios(std::string_view text);

/// Single-scenario convenience; the document must contain exactly one block.
ScenarioSpec parse_scenario(std::string_view text);

std::string write_scenarios(std::span<const ScenarioSpec> scenarios);

/// CSV with a fixed header, ',' separators, LF line endings; best_cost is
/// `none` when absent; booleans are 0/1.
std::string write_report(std::span<const RunReport> rows);

std::vector<RunReport> parse_report(std::string_view csv);

/// Assignment listing: one `service-id node-id` line, service ids ascending.
std::string write_assignment(const ProblemSpace& space, const Assignment& mu);

Assignment parse_assignment(const ProblemSpace& space, std::string_view text);

} // namespace drsop
