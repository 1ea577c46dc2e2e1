#include <cmath>

#include "strategy_common.hpp"

namespace drsop {

namespace {

// Below this temperature the acceptance probability of any worsening move is
// effectively zero; the trajectory is frozen and restarts.
constexpr double kFrozenTemperature = 1e-6;

double default_initial_temperature(const ProblemSpace& space) {
    Cost total = 0;
    for (const auto& s : space.services()) total += s.migration_cost;
    const auto l = static_cast<double>(std::max<std::size_t>(space.service_count(), 1));
    const double mean = static_cast<double>(total) / l;
    return mean > 0.0 ? mean : 1.0;
}

} // namespace

double annealing_acceptance(Score delta, double t) {
    if (delta <= 0) return 1.0;
    if (t <= 0.0) return 0.0;
    return portable_exp(-static_cast<double>(delta) / t);
}

namespace detail {

void sa_loop(SearchContext& ctx, Rng& rng, const StrategyParams& params,
             std::optional<Assignment> first, BestSeen* seen) {
    const double t0 = params.sa_initial_temperature > 0.0
                          ? params.sa_initial_temperature
                          : default_initial_temperature(ctx.space());
    const std::size_t l = ctx.space().service_count();
    const std::size_t k = ctx.enabled().size();
    if (l == 0 || k < 2) {
        // No neighbors exist; the start (or a random draw) is all there is.
        ctx.count_trajectory_start();
        Assignment only = first ? std::move(*first) : ctx.random_assignment(rng);
        if (!ctx.halted()) {
            if (seen) seen->offer(only, ctx.score_of(ctx.evaluate(only)));
        }
        return;
    }

    while (!ctx.halted()) {
        ctx.count_trajectory_start();
        Assignment current = first ? std::move(*first) : ctx.random_assignment(rng);
        first.reset();

        Score current_score = ctx.score_of(ctx.evaluate(current));
        if (seen) seen->offer(current, current_score);

        double temperature = t0;
        std::int64_t steps_at_level = 0;

        while (!ctx.halted() && temperature >= kFrozenTemperature) {
            // One uniformly random neighbor: a service and a different
            // enabled node. No neighborhood generation is needed.
            const auto s = static_cast<std::size_t>(rng.below(l));
            const std::int32_t from = current.node_at(s);
            std::size_t pos = static_cast<std::size_t>(rng.below(k - 1));
            if (ctx.enabled()[pos] == from) pos = k - 1;
            const std::int32_t to = ctx.enabled()[pos];

            current.placement[s] = to;
            const EvalResult ev = ctx.evaluate(current);
            const Score score = ctx.score_of(ev);
            if (seen) seen->offer(current, score);

            const Score delta = score - current_score;
            if (delta <= 0 || rng.unit() < annealing_acceptance(delta, temperature))
                current_score = score;
            else
                current.placement[s] = from; // rejected

            if (++steps_at_level >= params.sa_steps_per_temperature) {
                steps_at_level = 0;
                temperature *= params.sa_cooling_factor;
            }
        }
    }
}

} // namespace detail

SearchOutcome simulated_annealing(SearchContext& ctx, const StrategyParams& params) {
    detail::sa_loop(ctx, ctx.rng(), params, ctx.start(), nullptr);
    return ctx.take_outcome();
}

} // namespace drsop
