#include <unordered_set>

#include "strategy_common.hpp"

namespace drsop {

namespace detail {

namespace {

struct Move {
    std::size_t service = 0;
    std::int32_t node = 0;
};

/// Best-scoring move out of `mu`'s neighborhood; ties resolve to the first
/// move in (service id, node id) order. `exclude` drops visited encodings
/// (tabu); `accept_equal_or_worse` keeps the best move even when it does not
/// improve on `current_score`.
std::optional<Move> pick_move(SearchContext& ctx, Assignment& mu, Score current_score,
                              bool accept_equal_or_worse,
                              const std::unordered_set<std::string>* exclude,
                              BestSeen* seen, Score& out_score) {
    std::optional<Move> best;
    Score best_score = accept_equal_or_worse ? kScoreInf : current_score;

    for (std::size_t s : ctx.space().services_by_id()) {
        const std::int32_t from = mu.node_at(s);
        for (std::int32_t n : ctx.enabled()) {
            if (n == from) continue;
            if (ctx.halted()) {
                out_score = best_score;
                return best;
            }
            mu.placement[s] = n;
            const bool skip = exclude && exclude->contains(encode_placement(mu));
            if (!skip) {
                const EvalResult ev = ctx.evaluate(mu);
                const Score score = ctx.score_of(ev);
                if (seen) seen->offer(mu, score);
                if (score < best_score) {
                    best_score = score;
                    best = Move{s, n};
                }
            }
            mu.placement[s] = from;
        }
    }
    out_score = best_score;
    return best;
}

} // namespace

void greedy_loop(SearchContext& ctx, Rng& rng, const StrategyParams& params,
                 std::optional<Assignment> first, BestSeen* seen) {
    (void)params;
    while (!ctx.halted()) {
        ctx.count_trajectory_start();
        Assignment current = first ? std::move(*first) : ctx.random_assignment(rng);
        first.reset();

        Score current_score = ctx.score_of(ctx.evaluate(current));
        if (seen) seen->offer(current, current_score);

        // Hill-climb: move to the best neighbor while it strictly improves.
        while (!ctx.halted()) {
            Score move_score = kScoreInf;
            const auto move = pick_move(ctx, current, current_score,
                                        /*accept_equal_or_worse=*/false, nullptr, seen,
                                        move_score);
            if (!move) break; // local optimum
            current.placement[move->service] = move->node;
            current_score = move_score;
        }
    }
}

void tabu_loop(SearchContext& ctx, Rng& rng, const StrategyParams& params,
               std::optional<Assignment> first, BestSeen* seen) {
    while (!ctx.halted()) {
        ctx.count_trajectory_start();
        Assignment current = first ? std::move(*first) : ctx.random_assignment(rng);
        first.reset();

        std::unordered_set<std::string> visited;
        visited.insert(encode_placement(current));

        Score current_score = ctx.score_of(ctx.evaluate(current));
        if (seen) seen->offer(current, current_score);
        Score trajectory_best = current_score;
        std::int64_t dull_moves = 0;

        while (!ctx.halted()) {
            Score move_score = kScoreInf;
            const auto move = pick_move(ctx, current, current_score,
                                        /*accept_equal_or_worse=*/true, &visited, seen,
                                        move_score);
            if (!move) break; // whole neighborhood visited

            current.placement[move->service] = move->node;
            current_score = move_score;
            visited.insert(encode_placement(current));

            if (current_score < trajectory_best) {
                trajectory_best = current_score;
                dull_moves = 0;
            } else if (++dull_moves > params.tabu_dull_move_limit) {
                break; // give up on this trajectory
            }
        }
    }
}

} // namespace detail

SearchOutcome greedy_search(SearchContext& ctx, const StrategyParams& params) {
    detail::greedy_loop(ctx, ctx.rng(), params, ctx.start(), nullptr);
    return ctx.take_outcome();
}

SearchOutcome tabu_search(SearchContext& ctx, const StrategyParams& params) {
    detail::tabu_loop(ctx, ctx.rng(), params, ctx.start(), nullptr);
    return ctx.take_outcome();
}

} // namespace drsop
