#include "drsop/exhaustive.hpp"

namespace drsop {

ExhaustiveResult exhaustive_minimum(const ProblemSpace& space,
                                    std::span<const std::string> enabled_nodes) {
    const auto enabled = resolve_enabled_nodes(space, enabled_nodes);
    const std::size_t l = space.service_count();

    ExhaustiveResult result;
    std::vector<std::size_t> digits(l, 0); // odometer over enabled-node choices
    Assignment mu{{}};
    mu.placement.assign(l, enabled.front());

    while (true) {
        ++result.enumerated;
        if (is_stable(space, mu)) {
            const Cost cost = initial_transformation_cost(space, mu);
            if (!result.minimum || cost < *result.minimum) {
                result.minimum = cost;
                result.argmin = mu;
            }
        }

        std::size_t i = 0;
        for (; i < l; ++i) {
            if (++digits[i] < enabled.size()) {
                mu.placement[i] = enabled[digits[i]];
                break;
            }
            digits[i] = 0;
            mu.placement[i] = enabled.front();
        }
        if (i == l) break; // odometer wrapped
    }
    return result;
}

} // namespace drsop
