#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "drsop/clock.hpp"
#include "drsop/model.hpp"
#include "drsop/rng.hpp"
#include "drsop/strategy_id.hpp"

namespace drsop {

/// Candidate ranking value. Any amount of overload outweighs any migration
/// cost, so stable candidates always outrank unstable ones.
using Score = std::int64_t;

struct StrategyParams {
    std::int64_t tabu_dull_move_limit = 50;
    double sa_initial_temperature = -1; // <= 0: mean migration cost of the instance
    double sa_cooling_factor = 0.95;
    std::int64_t sa_steps_per_temperature = 100;
    std::int64_t ga_population = 100;
    std::int64_t ga_generations_cap = 1000;
    double ga_mutation_rate = -1; // < 0: 1/l
    std::int64_t ga_tournament_size = 3;
    double sga_seed_fraction = 0.25; // population downsize for seeded GA
    double sga_seed_slice = 0.25;    // budget share spent producing seeds
};

struct SearchStats {
    std::int64_t candidates_examined = 0;
    std::int64_t unique_candidates = 0;
    std::int64_t feasibility_checks = 0;
    std::int64_t cache_hits = 0;
    std::int64_t restarts = 0;
};

struct SearchOutcome {
    std::optional<Assignment> best; // present iff a stable candidate was found
    Cost best_cost = 0;             // valid iff best is present
    bool stable_found = false;
    bool truncated = false; // exact scan stopped by its safety cap
    SearchStats stats;
};

/// Stability summary of one candidate: total capacity deficit across all
/// nodes and kinds (0 means stable) and the transformation cost from the
/// declared initial placement.
struct EvalResult {
    Level overload = 0;
    Cost cost = 0;

    bool stable() const { return overload == 0; }
};

/// Per-run state shared by every strategy: the instance restricted to a node
/// subset, the pre-placed start assignment, the candidate cache, counters,
/// the budget clock and the seeded random source.
///
/// A context is single-threaded; concurrent runs each get their own.
class SearchContext {
public:
    /// `enabled_nodes` are the node ids candidates may map to. Services whose
    /// declared initial node is outside that set (homeless) start on the
    /// first enabled node and pay their migration cost wherever they end up.
    SearchContext(const ProblemSpace& space, std::span<const std::string> enabled_nodes,
                  std::uint64_t seed, DeadlineClock clock);

    /// Cached stability-and-cost lookup. Counts every call as a candidate;
    /// computes feasibility only on the first sight of an encoding. Keeps the
    /// best stable candidate seen so far.
    EvalResult evaluate(const Assignment& mu);

    Score score_of(const EvalResult& ev) const;

    /// Uniform independent choice of an enabled node per service.
    Assignment random_assignment(Rng& rng) const;

    /// True when the run should stop: budget exhausted or a cost-0 stable
    /// candidate found (nothing can beat it).
    bool halted() { return optimal_found_ || clock_.expired(); }

    const ProblemSpace& space() const { return *space_; }
    std::span<const std::int32_t> enabled() const { return enabled_; }
    const Assignment& start() const { return start_; }
    std::uint64_t seed() const { return seed_; }
    DeadlineClock& clock() { return clock_; }
    Rng& rng() { return rng_; }
    SearchStats& stats() { return stats_; }

    bool has_best() const { return best_.has_value(); }
    const Assignment& best() const { return *best_; }
    Cost best_cost() const { return best_cost_; }

    /// Restart accounting: every fresh trajectory after the run's first one
    /// counts as a restart.
    void count_trajectory_start() {
        if (trajectory_started_) ++stats_.restarts;
        trajectory_started_ = true;
    }

    /// Diagnostic: whether any evaluated candidate mapped a service to a
    /// node outside the enabled set.
    bool saw_disabled_destination() const { return saw_disabled_destination_; }

    SearchOutcome take_outcome(bool truncated = false) const;

private:
    const ProblemSpace* space_;
    std::vector<std::int32_t> enabled_;
    std::vector<std::uint8_t> enabled_mask_;
    Assignment start_;
    std::uint64_t seed_;
    DeadlineClock clock_;
    Rng rng_;
    SearchStats stats_;

    std::unordered_map<std::string, EvalResult> cache_;
    std::size_t key_bytes_ = 1;
    std::string key_scratch_;
    std::vector<Level> load_scratch_;
    Score penalty_weight_ = 1; // 1 + sum of all migration costs

    std::optional<Assignment> best_;
    Cost best_cost_ = 0;
    bool optimal_found_ = false;
    bool trajectory_started_ = false;
    bool saw_disabled_destination_ = false;

    void encode_key(const Assignment& mu);
    EvalResult compute(const Assignment& mu);
};

SearchOutcome greedy_search(SearchContext& ctx, const StrategyParams& params);
SearchOutcome tabu_search(SearchContext& ctx, const StrategyParams& params);
SearchOutcome simulated_annealing(SearchContext& ctx, const StrategyParams& params);
SearchOutcome genetic_algorithm(SearchContext& ctx, const StrategyParams& params);

/// GA whose initial population is produced by short runs of the base
/// strategy (greedy, tabu or sa) instead of random generation.
SearchOutcome seeded_ga(SearchContext& ctx, const StrategyParams& params, Strategy base);

/// Exact branch-and-bound over assignments onto the enabled nodes: services
/// in descending migration-cost order, the declared node tried first, leaves
/// cut on partial overload, paths cut against the incumbent. The context
/// clock acts as a safety cap; an unlimited clock proves optimality or
/// infeasibility.
SearchOutcome full_scan(SearchContext& ctx);

/// Dispatch by strategy id.
SearchOutcome run_strategy(Strategy strategy, SearchContext& ctx,
                           const StrategyParams& params);

/// Probability with which annealing accepts a candidate whose score is
/// `delta` above the current one at temperature `t`: exp(-delta/t), exactly
/// 1 at delta = 0, and 0 once the exponent underflows.
double annealing_acceptance(Score delta, double t);

} // namespace drsop
