#pragma once

#include <limits>
#include <optional>
#include <string>

#include "drsop/search.hpp"

namespace drsop::detail {

inline constexpr Score kScoreInf = std::numeric_limits<Score>::max();

/// Injective byte encoding of a placement, for visited-state sets. (Service
/// order is fixed by the vector layout, so no id sort is needed here.)
inline std::string encode_placement(const Assignment& mu) {
    std::string key(mu.size() * 4, '\0');
    char* out = key.data();
    for (std::int32_t n : mu.placement) {
        const auto u = static_cast<std::uint32_t>(n);
        *out++ = static_cast<char>(u & 0xFF);
        *out++ = static_cast<char>((u >> 8) & 0xFF);
        *out++ = static_cast<char>((u >> 16) & 0xFF);
        *out++ = static_cast<char>((u >> 24) & 0xFF);
    }
    return key;
}

/// Best-by-score candidate one runner invocation has personally evaluated.
/// Seeded GA harvests these from its base-strategy slices.
struct BestSeen {
    std::optional<Assignment> assignment;
    Score score = kScoreInf;

    void offer(const Assignment& mu, Score s) {
        if (s < score) {
            score = s;
            assignment = mu;
        }
    }
};

/// Restarting trajectory loops for the three end-state strategies. Each runs
/// until the context halts or (for seeding slices) its clock limit expires.
/// `first` seeds the first trajectory; later ones start randomized.
void greedy_loop(SearchContext& ctx, Rng& rng, const StrategyParams& params,
                 std::optional<Assignment> first, BestSeen* seen);
void tabu_loop(SearchContext& ctx, Rng& rng, const StrategyParams& params,
               std::optional<Assignment> first, BestSeen* seen);
void sa_loop(SearchContext& ctx, Rng& rng, const StrategyParams& params,
             std::optional<Assignment> first, BestSeen* seen);

inline void run_base_loop(Strategy base, SearchContext& ctx, Rng& rng,
                          const StrategyParams& params, BestSeen* seen) {
    switch (base) {
        case Strategy::Greedy: greedy_loop(ctx, rng, params, std::nullopt, seen); return;
        case Strategy::Tabu: tabu_loop(ctx, rng, params, std::nullopt, seen); return;
        case Strategy::Sa: sa_loop(ctx, rng, params, std::nullopt, seen); return;
        default: throw InputError("seeded GA base must be greedy, tabu or sa");
    }
}

} // namespace drsop::detail
