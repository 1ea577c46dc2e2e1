#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "drsop/model.hpp"

namespace drsop {

struct ExhaustiveResult {
    std::optional<Cost> minimum;     // absent: no stable assignment exists
    std::optional<Assignment> argmin;
    std::uint64_t enumerated = 0;    // assignments visited (|enabled|^l)
};

/// Minimum initial-basis transformation cost over every assignment of every
/// service onto the enabled nodes, by plain enumeration through the model
/// operations. Deliberately naive: this is the independent reference the
/// branch-and-bound scan is checked against. Exponential; callers bound the
/// instance size.
ExhaustiveResult exhaustive_minimum(const ProblemSpace& space,
                                    std::span<const std::string> enabled_nodes);

} // namespace drsop
