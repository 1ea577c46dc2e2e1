#include "drsop/clock.hpp"

#include <algorithm>
#include <limits>

namespace drsop {

namespace {

// Per-candidate virtual charge in nanoseconds. Deliberately above the real
// cost of hashing one assignment and checking stability, so a budget's worth
// of charges finishes well inside the wall budget on commodity hardware.
std::int64_t candidate_cost_ns(std::size_t services, std::size_t kinds) {
    const auto l = static_cast<std::int64_t>(std::max<std::size_t>(services, 1));
    const auto d = static_cast<std::int64_t>(std::max<std::size_t>(kinds, 1));
    return d * (200 + 45 * l);
}

// A scan tree step does O(d) work (one tentative placement plus bound checks).
std::int64_t scan_step_cost_ns(std::size_t kinds) {
    return 100 + 50 * static_cast<std::int64_t>(std::max<std::size_t>(kinds, 1));
}

} // namespace

DeadlineClock DeadlineClock::unlimited() {
    DeadlineClock c;
    c.budget_ns_ = std::numeric_limits<std::int64_t>::max();
    c.limit_ns_ = c.budget_ns_;
    c.candidate_cost_ns_ = 0;
    c.scan_step_cost_ns_ = 0;
    return c;
}

DeadlineClock DeadlineClock::for_budget(std::int64_t budget_ms, std::size_t services,
                                        std::size_t kinds) {
    DeadlineClock c;
    c.budget_ns_ = std::max<std::int64_t>(budget_ms, 0) * 1'000'000;
    c.limit_ns_ = c.budget_ns_;
    c.candidate_cost_ns_ = candidate_cost_ns(services, kinds);
    c.scan_step_cost_ns_ = scan_step_cost_ns(kinds);
    c.has_wall_ = true;
    c.wall_deadline_ =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
    return c;
}

void DeadlineClock::push_limit(std::int64_t at_virtual_ns) {
    limit_stack_.push_back(limit_ns_);
    limit_ns_ = std::min(limit_ns_, at_virtual_ns);
}

void DeadlineClock::pop_limit() {
    limit_ns_ = limit_stack_.back();
    limit_stack_.pop_back();
}

} // namespace drsop
