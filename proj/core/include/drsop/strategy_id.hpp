#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace drsop {

enum class Strategy {
    Greedy,
    Tabu,
    Sa,
    Ga,
    SgaGreedy,
    SgaTabu,
    SgaSa,
    FullScan,
};

inline constexpr std::array<Strategy, 8> kAllStrategies = {
    Strategy::Greedy, Strategy::Tabu,    Strategy::Sa,    Strategy::Ga,
    Strategy::SgaGreedy, Strategy::SgaTabu, Strategy::SgaSa, Strategy::FullScan,
};

/// The seven anytime strategies (everything except the exact scan).
inline constexpr std::array<Strategy, 7> kHeuristicStrategies = {
    Strategy::Greedy, Strategy::Tabu,    Strategy::Sa,   Strategy::Ga,
    Strategy::SgaGreedy, Strategy::SgaTabu, Strategy::SgaSa,
};

constexpr std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::Greedy: return "greedy";
        case Strategy::Tabu: return "tabu";
        case Strategy::Sa: return "sa";
        case Strategy::Ga: return "ga";
        case Strategy::SgaGreedy: return "sga-greedy";
        case Strategy::SgaTabu: return "sga-tabu";
        case Strategy::SgaSa: return "sga-sa";
        case Strategy::FullScan: return "fullscan";
    }
    return "?";
}

constexpr std::optional<Strategy> strategy_from_string(std::string_view id) {
    for (Strategy s : kAllStrategies)
        if (to_string(s) == id) return s;
    return std::nullopt;
}

} // namespace drsop
