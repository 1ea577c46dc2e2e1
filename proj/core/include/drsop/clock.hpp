#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

namespace drsop {

/// Budget accounting for one search run.
///
/// Progress is charged in deterministic virtual nanoseconds: every candidate
/// evaluation and every scan tree step costs a fixed amount derived from the
/// instance dimensions. A run ends when its virtual spend reaches the budget,
/// so identical (instance, strategy, seed, budget) runs stop at exactly the
/// same candidate on any machine, and every report column except wall_ms is
/// reproducible bit for bit. The charges overestimate the real cost of an
/// evaluation, which keeps actual wall time under the budget; a wall-clock
/// backstop still bounds machines slower than the estimate.
class DeadlineClock {
public:
    /// Never expires (exact scans run to completion).
    static DeadlineClock unlimited();

    static DeadlineClock for_budget(std::int64_t budget_ms, std::size_t services,
                                    std::size_t kinds);

    bool expired() {
        if (spent_ns_ >= limit_ns_) return true;
        if (has_wall_ && (++wall_check_ & 63u) == 0)
            return std::chrono::steady_clock::now() >= wall_deadline_;
        return false;
    }

    void charge_candidate() { spent_ns_ += candidate_cost_ns_; }
    void charge_scan_step() { spent_ns_ += scan_step_cost_ns_; }

    std::int64_t virtual_spent_ns() const { return spent_ns_; }
    std::int64_t virtual_budget_ns() const { return budget_ns_; }

    /// Temporarily tighten the expiry to an absolute virtual spend; used to
    /// carve seeding slices out of a run's budget. Never extends the budget.
    void push_limit(std::int64_t at_virtual_ns);
    void pop_limit();

private:
    std::int64_t budget_ns_ = 0;
    std::int64_t limit_ns_ = 0;
    std::int64_t spent_ns_ = 0;
    std::int64_t candidate_cost_ns_ = 1;
    std::int64_t scan_step_cost_ns_ = 1;
    bool has_wall_ = false;
    std::uint32_t wall_check_ = 0;
    std::chrono::steady_clock::time_point wall_deadline_{};
    std::vector<std::int64_t> limit_stack_;
};

} // namespace drsop
