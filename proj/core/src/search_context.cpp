#include "drsop/search.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace drsop {

namespace {

constexpr Score kScoreCap = std::numeric_limits<Score>::max() / 4;

// Memory guard for very long runs: once the cache holds this many encodings
// it is dropped and rebuilt. Re-seen candidates then count as fresh
// feasibility checks again, which keeps the counter identities intact.
constexpr std::size_t kMaxCacheEntries = std::size_t{1} << 23;

} // namespace

SearchContext::SearchContext(const ProblemSpace& space,
                             std::span<const std::string> enabled_nodes,
                             std::uint64_t seed, DeadlineClock clock)
    : space_(&space),
      enabled_(resolve_enabled_nodes(space, enabled_nodes)),
      start_{{}},
      seed_(seed),
      clock_(clock),
      rng_(seed) {
    enabled_mask_.assign(space.node_count(), 0);
    for (std::int32_t n : enabled_) enabled_mask_[static_cast<std::size_t>(n)] = 1;

    // Homeless services (declared node disabled or undefined) start on the
    // first enabled node; every placement costs them the same anyway.
    start_.placement.reserve(space.service_count());
    for (std::size_t s = 0; s < space.service_count(); ++s) {
        const std::int32_t declared = space.initial_node_index(s);
        const bool at_home = declared >= 0 && enabled_mask_[static_cast<std::size_t>(declared)];
        start_.placement.push_back(at_home ? declared : enabled_.front());
    }

    Score total_cost = 0;
    for (const auto& s : space.services()) total_cost += s.migration_cost;
    penalty_weight_ = total_cost + 1;

    if (space.node_count() > 0xFFFF)
        key_bytes_ = 4;
    else if (space.node_count() > 0xFF)
        key_bytes_ = 2;
    key_scratch_.resize(space.service_count() * key_bytes_);
    load_scratch_.resize(space.node_count() * space.resource_count());
    cache_.reserve(1 << 16);
}

void SearchContext::encode_key(const Assignment& mu) {
    // Canonical encoding: services in id order, destination indices packed
    // little-endian in the narrowest width that fits the node count.
    char* out = key_scratch_.data();
    for (std::size_t s : space_->services_by_id()) {
        const auto n = static_cast<std::uint32_t>(mu.node_at(s));
        for (std::size_t b = 0; b < key_bytes_; ++b)
            *out++ = static_cast<char>((n >> (8 * b)) & 0xFF);
    }
}

EvalResult SearchContext::compute(const Assignment& mu) {
    const std::size_t d = space_->resource_count();
    std::fill(load_scratch_.begin(), load_scratch_.end(), 0);

    Cost cost = 0;
    for (std::size_t s = 0; s < mu.size(); ++s) {
        const auto n = static_cast<std::size_t>(mu.node_at(s));
        if (!enabled_mask_[n]) saw_disabled_destination_ = true;
        const auto& svc = space_->services()[s];
        Level* load = load_scratch_.data() + n * d;
        for (std::size_t k = 0; k < d; ++k) load[k] += svc.required.levels[k];
        if (mu.node_at(s) != space_->initial_node_index(s)) cost += svc.migration_cost;
    }

    Level overload = 0;
    for (std::size_t n = 0; n < space_->node_count(); ++n) {
        const auto& avail = space_->nodes()[n].available.levels;
        const Level* load = load_scratch_.data() + n * d;
        for (std::size_t k = 0; k < d; ++k)
            if (load[k] > avail[k]) overload += load[k] - avail[k];
    }
    return {overload, cost};
}

EvalResult SearchContext::evaluate(const Assignment& mu) {
    assert(mu.size() == space_->service_count());
    ++stats_.candidates_examined;
    clock_.charge_candidate();

    encode_key(mu);
    if (cache_.size() >= kMaxCacheEntries) cache_.clear();
    auto [it, inserted] = cache_.try_emplace(key_scratch_);
    if (!inserted) {
        ++stats_.cache_hits;
        return it->second;
    }

    ++stats_.unique_candidates;
    ++stats_.feasibility_checks;
    const EvalResult ev = compute(mu);
    it->second = ev;

    if (ev.stable() && (!best_ || ev.cost < best_cost_)) {
        best_ = mu;
        best_cost_ = ev.cost;
        if (best_cost_ == 0) optimal_found_ = true; // cannot be beaten
    }
    return ev;
}

Score SearchContext::score_of(const EvalResult& ev) const {
    const auto wide = static_cast<__int128>(ev.overload) * penalty_weight_ +
                      static_cast<__int128>(ev.cost);
    return wide > kScoreCap ? kScoreCap : static_cast<Score>(wide);
}

Assignment SearchContext::random_assignment(Rng& rng) const {
    Assignment mu{{}};
    mu.placement.reserve(space_->service_count());
    for (std::size_t s = 0; s < space_->service_count(); ++s)
        mu.placement.push_back(enabled_[rng.below(enabled_.size())]);
    return mu;
}

SearchOutcome SearchContext::take_outcome(bool truncated) const {
    SearchOutcome out;
    out.best = best_;
    out.best_cost = best_cost_;
    out.stable_found = best_.has_value();
    out.truncated = truncated;
    out.stats = stats_;
    return out;
}

SearchOutcome run_strategy(Strategy strategy, SearchContext& ctx,
                           const StrategyParams& params) {
    switch (strategy) {
        case Strategy::Greedy: return greedy_search(ctx, params);
        case Strategy::Tabu: return tabu_search(ctx, params);
        case Strategy::Sa: return simulated_annealing(ctx, params);
        case Strategy::Ga: return genetic_algorithm(ctx, params);
        case Strategy::SgaGreedy: return seeded_ga(ctx, params, Strategy::Greedy);
        case Strategy::SgaTabu: return seeded_ga(ctx, params, Strategy::Tabu);
        case Strategy::SgaSa: return seeded_ga(ctx, params, Strategy::Sa);
        case Strategy::FullScan: return full_scan(ctx);
    }
    throw InputError("unknown strategy id");
}

} // namespace drsop
