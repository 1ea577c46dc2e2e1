#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drsop/instance_io.hpp"
#include "drsop/model.hpp"
#include "drsop/rng.hpp"

namespace drsop::testing {

struct NodeRow {
    std::string id;
    std::vector<Level> available;
};

struct ServiceRow {
    std::string id;
    std::string initial;
    Cost cost;
    std::vector<Level> required;
};

inline ProblemSpace make_space(std::vector<std::string> kinds, std::vector<NodeRow> nodes,
                               std::vector<ServiceRow> services) {
    std::vector<NodeSpec> ns;
    for (auto& n : nodes) ns.push_back({n.id, ResourceVector{std::move(n.available)}});
    std::vector<ServiceSpec> ss;
    for (auto& s : services)
        ss.push_back({s.id, s.initial, s.cost, ResourceVector{std::move(s.required)}});
    return ProblemSpace(ResourceKindList{std::move(kinds)}, std::move(ns), std::move(ss));
}

inline std::vector<std::string> all_node_ids(const ProblemSpace& space) {
    std::vector<std::string> ids;
    for (const auto& n : space.nodes()) ids.push_back(n.id);
    return ids;
}

/// Random instance for property tests: l services, m nodes, d kinds.
/// `homeless_share` of services declare an initial node the space does not
/// define. Deterministic for a given rng state.
inline ProblemSpace random_space(Rng& rng, std::size_t l, std::size_t m, std::size_t d,
                                 double homeless_share = 0.15) {
    std::vector<std::string> kinds;
    for (std::size_t k = 0; k < d; ++k) kinds.push_back("r" + std::to_string(k));

    std::vector<NodeRow> nodes;
    for (std::size_t n = 0; n < m; ++n) {
        std::vector<Level> avail;
        for (std::size_t k = 0; k < d; ++k)
            avail.push_back(static_cast<Level>(rng.below(31)));
        nodes.push_back({std::string(1, static_cast<char>('A' + n)), std::move(avail)});
    }

    std::vector<ServiceRow> services;
    for (std::size_t s = 0; s < l; ++s) {
        std::vector<Level> req;
        for (std::size_t k = 0; k < d; ++k)
            req.push_back(static_cast<Level>(rng.below(13)));
        const bool homeless = rng.unit() < homeless_share;
        const std::string initial =
            homeless ? "Z" : std::string(1, static_cast<char>('A' + rng.below(m)));
        char id[24];
        std::snprintf(id, sizeof id, "%02zu", s + 1);
        services.push_back({id, initial, static_cast<Cost>(rng.below(21)), std::move(req)});
    }
    return make_space(std::move(kinds), std::move(nodes), std::move(services));
}

/// Uniformly random total assignment onto the space's own nodes.
inline Assignment random_total_assignment(Rng& rng, const ProblemSpace& space) {
    Assignment mu{{}};
    for (std::size_t s = 0; s < space.service_count(); ++s)
        mu.placement.push_back(static_cast<std::int32_t>(rng.below(space.node_count())));
    return mu;
}

/// The local-search trap: three services over nodes A(8) B(5) C(4). The
/// start (t1 and t2 stacked on A) descends to an unstable point whose best
/// neighbor does not improve, and the cheap stable assignments (cost 2,
/// established exhaustively in the tests) lie behind that non-improving
/// move; a costlier stable local optimum (cost 6, t2 on B) catches pure
/// descent instead.
inline ProblemSpace trap_space() {
    return make_space({"slots"}, {{"A", {8}}, {"B", {5}}, {"C", {4}}},
                      {{"t1", "A", 1, {5}}, {"t2", "A", 5, {5}}, {"t3", "B", 1, {3}}});
}

/// A space whose declared initial assignment is stable.
inline ProblemSpace stable_start_space() {
    return make_space({"cpu", "mem"}, {{"X", {10, 10}}, {"Y", {10, 10}}},
                      {{"u", "X", 3, {2, 2}}, {"v", "Y", 4, {3, 1}}, {"w", "X", 2, {1, 1}}});
}

} // namespace drsop::testing
