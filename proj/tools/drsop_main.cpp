// drsop: solve one instance, run the benchmark ladder, verify a solution
// file, or enumerate the exact optimum of a small instance.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drsop/bench.hpp"
#include "drsop/exhaustive.hpp"
#include "drsop/fixtures.hpp"
#include "drsop/instance_io.hpp"
#include "drsop/model.hpp"
#include "drsop/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNoStable = 2;

std::string read_input(const std::string& path) {
    if (path == "builtin:paper") return std::string(drsop::fixtures::paper_instance());
    if (path == "builtin:paper-tables")
        return std::string(drsop::fixtures::paper_tables_instance());
    if (path == "builtin:paper-scenarios")
        return std::string(drsop::fixtures::paper_scenarios());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw drsop::InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw drsop::InputError("cannot write '" + path + "'");
    out << content;
}

struct Restriction {
    std::string services; // "first..last"
    std::string nodes;    // comma-separated ids
};

void add_restriction_flags(CLI::App* cmd, Restriction& r) {
    cmd->add_option("--services", r.services,
                    "Deploy only services with numeric ids in <first>..<last>");
    cmd->add_option("--nodes", r.nodes, "Enabled node ids, comma-separated");
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? text.size() - pos : comma - pos);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw drsop::InputError("malformed service range '" + text + "' (want <first>..<last>)");
    try {
        return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw drsop::InputError("malformed service range '" + text + "'");
    }
}

/// Instance after --services restriction, plus the enabled node list
/// (defaults to every node the instance defines).
std::pair<drsop::ProblemSpace, std::vector<std::string>> load_restricted(
    const std::string& instance_path, const Restriction& r) {
    drsop::ProblemSpace space = drsop::parse_instance(read_input(instance_path));
    if (!r.services.empty()) {
        const auto [first, last] = parse_range(r.services);
        space = drsop::restrict_services(space, first, last);
    }
    std::vector<std::string> enabled;
    if (!r.nodes.empty()) {
        enabled = split_csv_list(r.nodes);
    } else {
        for (const auto& n : space.nodes()) enabled.push_back(n.id);
    }
    return {std::move(space), std::move(enabled)};
}

void add_param_flags(CLI::App* cmd, drsop::StrategyParams& p) {
    cmd->add_option("--tabu-dull-limit", p.tabu_dull_move_limit,
                    "Consecutive non-improving tabu moves before giving up");
    cmd->add_option("--sa-initial-temp", p.sa_initial_temperature,
                    "Annealing start temperature (<=0: mean migration cost)");
    cmd->add_option("--sa-cooling", p.sa_cooling_factor, "Annealing cooling factor in (0,1)");
    cmd->add_option("--sa-steps", p.sa_steps_per_temperature, "Annealing steps per temperature");
    cmd->add_option("--ga-population", p.ga_population, "GA population size");
    cmd->add_option("--ga-generations", p.ga_generations_cap, "GA generation cap per restart");
    cmd->add_option("--ga-mutation", p.ga_mutation_rate, "GA per-gene mutation rate (<0: 1/l)");
    cmd->add_option("--ga-tournament", p.ga_tournament_size, "GA tournament size");
    cmd->add_option("--sga-seed-fraction", p.sga_seed_fraction,
                    "Seeded-GA population fraction of --ga-population");
    cmd->add_option("--sga-seed-slice", p.sga_seed_slice,
                    "Budget share the seeded GA spends producing seeds");
}

void validate_params(const drsop::StrategyParams& p) {
    if (p.tabu_dull_move_limit < 0) throw drsop::InputError("--tabu-dull-limit must be >= 0");
    if (p.sa_cooling_factor <= 0.0 || p.sa_cooling_factor >= 1.0)
        throw drsop::InputError("--sa-cooling must be in (0,1)");
    if (p.sa_steps_per_temperature < 1) throw drsop::InputError("--sa-steps must be >= 1");
    if (p.ga_population < 1) throw drsop::InputError("--ga-population must be >= 1");
    if (p.ga_generations_cap < 1) throw drsop::InputError("--ga-generations must be >= 1");
    if (p.ga_mutation_rate > 1.0) throw drsop::InputError("--ga-mutation must be <= 1");
    if (p.ga_tournament_size < 1) throw drsop::InputError("--ga-tournament must be >= 1");
    if (p.sga_seed_fraction <= 0.0 || p.sga_seed_fraction > 1.0)
        throw drsop::InputError("--sga-seed-fraction must be in (0,1]");
    if (p.sga_seed_slice < 0.0 || p.sga_seed_slice >= 1.0)
        throw drsop::InputError("--sga-seed-slice must be in [0,1)");
}

int cmd_solve(const std::string& instance_path, const Restriction& restriction,
              const std::string& strategy_id, std::int64_t budget_ms, std::uint64_t seed,
              std::int64_t fullscan_cap_ms, const std::string& out_path,
              const drsop::StrategyParams& params) {
    validate_params(params);
    const auto strategy = drsop::strategy_from_string(strategy_id);
    if (!strategy) throw drsop::InputError("unknown strategy id '" + strategy_id + "'");
    if (budget_ms <= 0) throw drsop::InputError("--budget-ms must be positive");

    const auto [space, enabled] = load_restricted(instance_path, restriction);

    // The exact scan runs to completion unless the caller caps it.
    drsop::DeadlineClock clock =
        *strategy == drsop::Strategy::FullScan
            ? (fullscan_cap_ms > 0 ? drsop::DeadlineClock::for_budget(
                                         fullscan_cap_ms, space.service_count(),
                                         space.resource_count())
                                   : drsop::DeadlineClock::unlimited())
            : drsop::DeadlineClock::for_budget(budget_ms, space.service_count(),
                                               space.resource_count());

    drsop::SearchContext ctx(space, enabled, seed, clock);
    const auto started = std::chrono::steady_clock::now();
    const drsop::SearchOutcome outcome = drsop::run_strategy(*strategy, ctx, params);
    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();

    drsop::RunReport row;
    row.scenario = "solve";
    row.strategy = *strategy;
    row.seed = seed;
    if (outcome.stable_found) row.best_cost = outcome.best_cost;
    row.stable = outcome.stable_found;
    row.restarts = outcome.stats.restarts;
    row.candidates_examined = outcome.stats.candidates_examined;
    row.unique_candidates = outcome.stats.unique_candidates;
    row.feasibility_checks = outcome.stats.feasibility_checks;
    row.cache_hits = outcome.stats.cache_hits;
    row.wall_ms = wall;
    row.incomplete = outcome.truncated;
    std::cout << drsop::write_report({&row, 1});

    if (!outcome.stable_found) return kExitNoStable;
    if (!out_path.empty())
        write_output(out_path, drsop::write_assignment(space, *outcome.best));
    return kExitOk;
}

int cmd_bench(const std::string& instance_path, const std::string& scenarios_path,
              double budget_scale, int parallel, const std::string& out_path,
              const drsop::StrategyParams& params) {
    validate_params(params);
    const drsop::ProblemSpace space = drsop::parse_instance(read_input(instance_path));
    drsop::BenchPlan plan;
    plan.instance = &space;
    plan.scenarios = drsop::parse_scenarios(read_input(scenarios_path));
    plan.budget_scale = budget_scale;
    plan.parallel_runs = parallel;
    plan.params = params;

    const std::string csv = drsop::run_plan(plan);
    if (out_path.empty())
        std::cout << csv;
    else
        write_output(out_path, csv);
    return kExitOk;
}

int cmd_verify(const std::string& instance_path, const Restriction& restriction,
               const std::string& assignment_path) {
    const auto [space, enabled] = load_restricted(instance_path, restriction);
    (void)enabled;
    const drsop::Assignment mu =
        drsop::parse_assignment(space, read_input(assignment_path));

    const drsop::Cost cost = drsop::initial_transformation_cost(space, mu);
    bool stable = true;
    for (const auto& node : space.nodes()) {
        const drsop::ResourceVector rem = drsop::remaining_resources(space, mu, node.id);
        for (std::size_t k = 0; k < rem.size(); ++k) {
            if (rem.levels[k] >= 0) continue;
            stable = false;
            std::cout << "overloaded node " << node.id << " resource "
                      << space.kinds().kinds[k] << " deficit " << -rem.levels[k] << "\n";
        }
    }
    std::cout << "cost " << cost << "\n";
    std::cout << "stable " << (stable ? "yes" : "no") << "\n";
    return stable ? kExitOk : kExitNoStable;
}

int cmd_oracle(const std::string& instance_path, const Restriction& restriction,
               std::int64_t max_services) {
    const auto [space, enabled] = load_restricted(instance_path, restriction);
    if (static_cast<std::int64_t>(space.service_count()) > max_services)
        throw drsop::InputError(
            "instance has " + std::to_string(space.service_count()) +
            " services; the exhaustive oracle refuses above --max-services (" +
            std::to_string(max_services) + ")");

    const drsop::ExhaustiveResult result = drsop::exhaustive_minimum(space, enabled);
    std::cout << "enumerated " << result.enumerated << "\n";
    if (!result.minimum) {
        std::cout << "infeasible\n";
        return kExitNoStable;
    }
    std::cout << "minimum " << *result.minimum << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver and benchmark harness for the d-resource system "
                 "optimization problem (service-to-node assignment under "
                 "capacity constraints, minimizing migration cost)"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Run one strategy on one instance");
    std::string instance_path, strategy_id, out_path;
    Restriction restriction;
    std::int64_t budget_ms = 10'000;
    std::uint64_t seed = 1;
    std::int64_t fullscan_cap_ms = 0;
    drsop::StrategyParams params;
    solve->add_option("--instance", instance_path, "Instance file (or builtin:paper)")
        ->required();
    solve->add_option("--strategy", strategy_id,
                      "greedy|tabu|sa|ga|sga-greedy|sga-tabu|sga-sa|fullscan")
        ->required();
    solve->add_option("--budget-ms", budget_ms, "Time budget per run (ignored by fullscan)");
    solve->add_option("--seed", seed, "RNG seed");
    solve->add_option("--fullscan-cap-ms", fullscan_cap_ms,
                      "Optional safety cap for fullscan (0 = run to completion)");
    solve->add_option("--out", out_path, "Write the best assignment to this file");
    add_restriction_flags(solve, restriction);
    add_param_flags(solve, params);

    // bench
    auto* bench = app.add_subcommand("bench", "Run a scenario ladder and emit CSV");
    std::string scenarios_path, bench_out;
    double budget_scale = 1.0;
    int parallel = 1;
    bench->add_option("--instance", instance_path, "Instance file (or builtin:paper)")
        ->required();
    bench->add_option("--scenarios", scenarios_path,
                      "Scenario file (or builtin:paper-scenarios)")
        ->required();
    bench->add_option("--budget-scale", budget_scale, "Multiplier on every scenario budget");
    bench->add_option("--parallel", parallel, "Max concurrent runs");
    bench->add_option("--out", bench_out, "CSV output path (default stdout)");
    add_param_flags(bench, params);

    // verify
    auto* verify = app.add_subcommand("verify", "Recheck an assignment file from scratch");
    std::string assignment_path;
    verify->add_option("--instance", instance_path, "Instance file (or builtin:paper)")
        ->required();
    verify->add_option("--assignment", assignment_path, "Assignment file to verify")
        ->required();
    add_restriction_flags(verify, restriction);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum of a small instance");
    std::int64_t max_services = 10;
    oracle->add_option("--instance", instance_path, "Instance file")->required();
    oracle->add_option("--max-services", max_services,
                       "Refuse instances with more services than this");
    add_restriction_flags(oracle, restriction);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve->parsed())
            return cmd_solve(instance_path, restriction, strategy_id, budget_ms, seed,
                             fullscan_cap_ms, out_path, params);
        if (bench->parsed())
            return cmd_bench(instance_path, scenarios_path, budget_scale, parallel,
                             bench_out, params);
        if (verify->parsed()) return cmd_verify(instance_path, restriction, assignment_path);
        if (oracle->parsed()) return cmd_oracle(instance_path, restriction, max_services);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
