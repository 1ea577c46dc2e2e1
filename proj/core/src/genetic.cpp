#include <algorithm>
#include <cmath>

#include "strategy_common.hpp"

namespace drsop {

namespace {

using detail::BestSeen;
using detail::kScoreInf;

struct Individual {
    Assignment genes{{}};
    Score score = kScoreInf;
};

struct GaSettings {
    std::size_t population = 1;
    double mutation_rate = 0.0;
    std::size_t tournament = 1;
    std::int64_t generations_cap = 1;
};

GaSettings resolve_settings(const SearchContext& ctx, const StrategyParams& params,
                            std::size_t population) {
    GaSettings s;
    s.population = std::max<std::size_t>(population, 1);
    const auto l = static_cast<double>(std::max<std::size_t>(ctx.space().service_count(), 1));
    s.mutation_rate = params.ga_mutation_rate >= 0.0 ? params.ga_mutation_rate : 1.0 / l;
    s.tournament = static_cast<std::size_t>(std::max<std::int64_t>(params.ga_tournament_size, 1));
    s.generations_cap = std::max<std::int64_t>(params.ga_generations_cap, 1);
    return s;
}

std::size_t tournament_pick(const std::vector<Individual>& pop, Rng& rng,
                            std::size_t rounds) {
    std::size_t winner = static_cast<std::size_t>(rng.below(pop.size()));
    for (std::size_t i = 1; i < rounds; ++i) {
        const auto challenger = static_cast<std::size_t>(rng.below(pop.size()));
        if (pop[challenger].score < pop[winner].score) winner = challenger;
    }
    return winner;
}

/// Generational loop over an already evaluated population: tournament
/// selection, uniform crossover, per-gene mutation onto enabled nodes,
/// elitism of one. Returns when the generation cap or the deadline hits.
void evolve(SearchContext& ctx, Rng& rng, const GaSettings& settings,
            std::vector<Individual>& population) {
    const std::size_t genes = ctx.space().service_count();

    for (std::int64_t gen = 0; gen < settings.generations_cap && !ctx.halted(); ++gen) {
        const auto elite =
            std::min_element(population.begin(), population.end(),
                             [](const Individual& a, const Individual& b) {
                                 return a.score < b.score;
                             });

        std::vector<Individual> next;
        next.reserve(population.size());
        next.push_back(*elite);

        while (next.size() < population.size() && !ctx.halted()) {
            const Individual& a = population[tournament_pick(population, rng, settings.tournament)];
            const Individual& b = population[tournament_pick(population, rng, settings.tournament)];

            Individual child;
            child.genes.placement.resize(genes);
            for (std::size_t g = 0; g < genes; ++g) {
                const std::int32_t gene =
                    (rng.next() & 1) ? a.genes.node_at(g) : b.genes.node_at(g);
                child.genes.placement[g] =
                    rng.unit() < settings.mutation_rate
                        ? ctx.enabled()[rng.below(ctx.enabled().size())]
                        : gene;
            }
            child.score = ctx.score_of(ctx.evaluate(child.genes));
            next.push_back(std::move(child));
        }
        population = std::move(next);
    }
}

std::vector<Individual> random_population(SearchContext& ctx, Rng& rng, std::size_t size) {
    std::vector<Individual> population;
    population.reserve(size);
    while (population.size() < size && !ctx.halted()) {
        Individual ind;
        ind.genes = ctx.random_assignment(rng);
        ind.score = ctx.score_of(ctx.evaluate(ind.genes));
        population.push_back(std::move(ind));
    }
    return population;
}

} // namespace

SearchOutcome genetic_algorithm(SearchContext& ctx, const StrategyParams& params) {
    const GaSettings settings = resolve_settings(
        ctx, params, static_cast<std::size_t>(std::max<std::int64_t>(params.ga_population, 1)));
    Rng& rng = ctx.rng();

    ctx.evaluate(ctx.start()); // baseline; a stable start is a valid outcome
    while (!ctx.halted()) {
        ctx.count_trajectory_start();
        auto population = random_population(ctx, rng, settings.population);
        if (population.empty()) break;
        evolve(ctx, rng, settings, population);
    }
    return ctx.take_outcome();
}

SearchOutcome seeded_ga(SearchContext& ctx, const StrategyParams& params, Strategy base) {
    const auto full = static_cast<double>(std::max<std::int64_t>(params.ga_population, 1));
    const auto seed_count = static_cast<std::size_t>(
        std::max(1.0, std::ceil(full * params.sga_seed_fraction)));
    const GaSettings settings = resolve_settings(ctx, params, seed_count);
    Rng& rng = ctx.rng();

    const auto slice_total = static_cast<std::int64_t>(
        static_cast<double>(ctx.clock().virtual_budget_ns()) * params.sga_seed_slice);

    ctx.evaluate(ctx.start());
    std::uint64_t sub_stream = 0;
    while (!ctx.halted()) {
        // Seeding phase: one short base-strategy run per seed individual,
        // each with its own sub-seed, sharing this run's cache and counters.
        const std::int64_t slice_start = ctx.clock().virtual_spent_ns();
        std::vector<Individual> population;
        population.reserve(seed_count);
        for (std::size_t i = 0; i < seed_count && !ctx.halted(); ++i) {
            const std::int64_t checkpoint =
                slice_start + slice_total * static_cast<std::int64_t>(i + 1) /
                                  static_cast<std::int64_t>(seed_count);
            Rng sub_rng(mix_seed(ctx.seed(), ++sub_stream));
            BestSeen seen;
            ctx.clock().push_limit(checkpoint);
            detail::run_base_loop(base, ctx, sub_rng, params, &seen);
            ctx.clock().pop_limit();
            if (seen.assignment) {
                population.push_back({std::move(*seen.assignment), seen.score});
            }
        }
        // Shortfall (expired slices or an empty seeding budget) falls back to
        // random individuals, like the unseeded GA.
        while (population.size() < seed_count && !ctx.halted()) {
            Individual ind;
            ind.genes = ctx.random_assignment(rng);
            ind.score = ctx.score_of(ctx.evaluate(ind.genes));
            population.push_back(std::move(ind));
        }
        if (population.empty()) break;
        evolve(ctx, rng, settings, population);
    }
    return ctx.take_outcome();
}

} // namespace drsop
