#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

#include "strategy_common.hpp"

namespace drsop {

namespace {

constexpr Cost kCostInf = std::numeric_limits<Cost>::max() / 2;

struct Scan {
    SearchContext& ctx;
    const ProblemSpace& space;
    std::vector<std::size_t> order;   // services, migration cost descending
    std::vector<Cost> forced_suffix;  // cost every deeper forced-to-move service must pay
    std::vector<Level> remaining;     // node-major remaining capacities
    std::vector<std::int32_t> branch_order; // per depth: declared node first, then ascending
    Assignment current{{}};
    bool truncated = false;

    explicit Scan(SearchContext& c) : ctx(c), space(c.space()) {}

    Cost incumbent() const { return ctx.has_best() ? ctx.best_cost() : kCostInf; }

    bool node_enabled(std::int32_t n) const {
        for (std::int32_t e : ctx.enabled())
            if (e == n) return true;
        return false;
    }

    /// A service that can never stay put: declared node disabled or
    /// undefined, or its demand exceeds that node's total capacity.
    bool forced_to_move(std::size_t s) const {
        const std::int32_t declared = space.initial_node_index(s);
        if (declared < 0 || !node_enabled(declared)) return true;
        const auto& avail = space.nodes()[static_cast<std::size_t>(declared)].available.levels;
        const auto& req = space.services()[s].required.levels;
        for (std::size_t k = 0; k < req.size(); ++k)
            if (req[k] > avail[k]) return true;
        return false;
    }

    bool fits(std::int32_t node, const std::vector<Level>& req) const {
        const Level* slot = remaining.data() +
                            static_cast<std::size_t>(node) * space.resource_count();
        for (std::size_t k = 0; k < req.size(); ++k)
            if (slot[k] < req[k]) return false;
        return true;
    }

    void place(std::int32_t node, const std::vector<Level>& req, int sign) {
        Level* slot = remaining.data() +
                      static_cast<std::size_t>(node) * space.resource_count();
        for (std::size_t k = 0; k < req.size(); ++k) slot[k] -= sign * req[k];
    }

    // Returns false when the safety cap aborted the scan.
    bool dfs(std::size_t depth, Cost accumulated) {
        ctx.clock().charge_scan_step();
        if (ctx.clock().expired()) {
            truncated = true;
            return false;
        }
        if (accumulated + forced_suffix[depth] >= incumbent()) return true;

        if (depth == order.size()) {
            // Leaf: stable by construction (placements never overdrew a node).
            const EvalResult ev = ctx.evaluate(current); // updates the incumbent
            assert(ev.stable() && ev.cost == accumulated);
            (void)ev;
            return true;
        }

        const std::size_t s = order[depth];
        const auto& req = space.services()[s].required.levels;
        const Cost move_cost = space.services()[s].migration_cost;
        const std::int32_t declared = space.initial_node_index(s);
        const bool may_stay = declared >= 0 && node_enabled(declared);

        if (may_stay && fits(declared, req)) {
            place(declared, req, +1);
            current.placement[s] = declared;
            if (!dfs(depth + 1, accumulated)) return false;
            place(declared, req, -1);
        }

        // Every other destination costs the same, so one bound settles them all.
        if (accumulated + move_cost + forced_suffix[depth + 1] >= incumbent()) return true;

        for (std::int32_t n : ctx.enabled()) {
            if (may_stay && n == declared) continue;
            if (!fits(n, req)) continue;
            place(n, req, +1);
            current.placement[s] = n;
            if (!dfs(depth + 1, accumulated + move_cost)) return false;
            place(n, req, -1);
        }
        return true;
    }
};

} // namespace

SearchOutcome full_scan(SearchContext& ctx) {
    ctx.evaluate(ctx.start()); // a stable start primes the incumbent
    if (ctx.halted()) return ctx.take_outcome();

    Scan scan(ctx);
    const auto& space = ctx.space();

    scan.order.resize(space.service_count());
    std::iota(scan.order.begin(), scan.order.end(), std::size_t{0});
    std::sort(scan.order.begin(), scan.order.end(), [&](std::size_t a, std::size_t b) {
        const Cost ca = space.services()[a].migration_cost;
        const Cost cb = space.services()[b].migration_cost;
        if (ca != cb) return ca > cb;
        return space.services()[a].id < space.services()[b].id;
    });

    scan.forced_suffix.assign(space.service_count() + 1, 0);
    for (std::size_t i = space.service_count(); i-- > 0;) {
        const std::size_t s = scan.order[i];
        scan.forced_suffix[i] =
            scan.forced_suffix[i + 1] +
            (scan.forced_to_move(s) ? space.services()[s].migration_cost : 0);
    }

    const std::size_t d = space.resource_count();
    scan.remaining.resize(space.node_count() * d);
    for (std::size_t n = 0; n < space.node_count(); ++n) {
        const auto& avail = space.nodes()[n].available.levels;
        std::copy(avail.begin(), avail.end(), scan.remaining.begin() + n * d);
    }

    scan.current.placement.assign(space.service_count(), ctx.enabled().front());
    scan.dfs(0, 0);
    return ctx.take_outcome(scan.truncated);
}

} // namespace drsop
