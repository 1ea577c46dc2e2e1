#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drsop/errors.hpp"

namespace drsop {

/// Resource amounts and migration costs are exact integers; sums over
/// services are accumulated in 64 bits.
using Level = std::int64_t;
using Cost = std::int64_t;

/// Ordered list of resource-kind names; its length d is fixed for the
/// lifetime of a ProblemSpace.
struct ResourceKindList {
    std::vector<std::string> kinds;

    std::size_t size() const { return kinds.size(); }
    bool operator==(const ResourceKindList&) const = default;
};

/// One integer level per resource kind. Levels are non-negative when
/// describing capacities or demands; remaining-resource results may carry
/// negative components (overload).
struct ResourceVector {
    std::vector<Level> levels;

    std::size_t size() const { return levels.size(); }
    bool operator==(const ResourceVector&) const = default;
};

struct NodeSpec {
    std::string id;
    ResourceVector available;

    bool operator==(const NodeSpec&) const = default;
};

struct ServiceSpec {
    std::string id;
    std::string initial_node; // may name a node the space does not define
    Cost migration_cost = 0;
    ResourceVector required;

    bool operator==(const ServiceSpec&) const = default;
};

/// A total assignment of every service to one node, stored as node indices
/// in service-declaration order. Values always index into the owning
/// space's node list.
struct Assignment {
    std::vector<std::int32_t> placement;

    std::size_t size() const { return placement.size(); }
    std::int32_t node_at(std::size_t service) const { return placement[service]; }
    bool operator==(const Assignment&) const = default;
};

/// The immutable problem description: resource kinds, nodes with capacities,
/// services with demands, declared initial nodes and migration costs.
/// A service whose initial node is not defined here is homeless-eligible;
/// it is resolved when a node subset is chosen for a run.
class ProblemSpace {
public:
    ProblemSpace(ResourceKindList kinds, std::vector<NodeSpec> nodes,
                 std::vector<ServiceSpec> services);

    std::size_t resource_count() const { return kinds_.size(); }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t service_count() const { return services_.size(); }

    const ResourceKindList& kinds() const { return kinds_; }
    const std::vector<NodeSpec>& nodes() const { return nodes_; }
    const std::vector<ServiceSpec>& services() const { return services_; }

    std::optional<std::size_t> node_index(std::string_view id) const;
    std::optional<std::size_t> service_index(std::string_view id) const;

    /// Index permutations sorted by id; every deterministic ordering in the
    /// library walks these.
    std::span<const std::size_t> services_by_id() const { return services_by_id_; }
    std::span<const std::size_t> nodes_by_id() const { return nodes_by_id_; }

    /// Declared initial node of a service as an index, or -1 when the space
    /// does not define that node.
    std::int32_t initial_node_index(std::size_t service) const {
        return initial_index_[service];
    }

    bool operator==(const ProblemSpace& other) const;

private:
    ResourceKindList kinds_;
    std::vector<NodeSpec> nodes_;
    std::vector<ServiceSpec> services_;
    std::vector<std::size_t> services_by_id_;
    std::vector<std::size_t> nodes_by_id_;
    std::vector<std::int32_t> initial_index_;
};

// ---------------------------------------------------------------------------
// Assignment construction helpers

/// Build an assignment from (service-id, node-id) pairs. Requires exactly one
/// pair per service of the space and node ids the space defines.
Assignment assignment_from_pairs(
    const ProblemSpace& space,
    std::span<const std::pair<std::string, std::string>> pairs);

/// The assignment as (service-id, node-id) pairs, service ids ascending.
std::vector<std::pair<std::string, std::string>> assignment_to_pairs(
    const ProblemSpace& space, const Assignment& mu);

/// The declared initial assignment. Throws InputError if any service's
/// initial node is undefined in the space.
Assignment initial_assignment(const ProblemSpace& space);

// ---------------------------------------------------------------------------
// Model operations

/// Ids of the services mapped to `node` under `mu`, ascending.
std::vector<std::string> services_on_node(const ProblemSpace& space,
                                          const Assignment& mu,
                                          std::string_view node);

/// Component-wise available-minus-demand for one node; components may be
/// negative (overload).
ResourceVector remaining_resources(const ProblemSpace& space,
                                   const Assignment& mu,
                                   std::string_view node);

/// True iff every node's remaining resources are non-negative in every kind.
bool is_stable(const ProblemSpace& space, const Assignment& mu);

/// 0 if the service kept its node between mu0 and mu1, else its migration
/// cost.
Cost per_service_cost(const ProblemSpace& space, const Assignment& mu0,
                      const Assignment& mu1, std::string_view service);

/// Sum of per-service costs over all services.
Cost transformation_cost(const ProblemSpace& space, const Assignment& mu0,
                         const Assignment& mu1);

/// Cost of `mu` measured against the declared initial nodes. A service whose
/// declared node is undefined in the space (or simply never matched by `mu`)
/// pays its migration cost; this is the cost basis used by searches, where a
/// homeless service pays for any placement.
Cost initial_per_service_cost(const ProblemSpace& space, const Assignment& mu,
                              std::string_view service);
Cost initial_transformation_cost(const ProblemSpace& space, const Assignment& mu);

/// True iff the assignments differ in exactly one service.
bool are_neighbors(const Assignment& mu0, const Assignment& mu1);

/// Every assignment differing from `mu` in exactly one service, destinations
/// limited to `enabled_nodes`. Order: service id ascending, then destination
/// node id ascending. The current node of a service is never a destination.
std::vector<Assignment> enumerate_neighbors(
    const ProblemSpace& space, const Assignment& mu,
    std::span<const std::string> enabled_nodes);

/// Sub-space containing only the services accepted by `keep` (declaration
/// order preserved); the node list is unchanged.
template <typename Pred>
ProblemSpace filter_services(const ProblemSpace& space, Pred keep) {
    std::vector<ServiceSpec> kept;
    for (const auto& s : space.services())
        if (keep(s)) kept.push_back(s);
    return ProblemSpace(space.kinds(), space.nodes(), std::move(kept));
}

/// Sub-space with only the services whose id parses as an integer in
/// [first, last].
ProblemSpace restrict_services(const ProblemSpace& space, std::int64_t first,
                               std::int64_t last);

/// Resolve a node-id list to ascending-by-id unique indices. Throws
/// InputError on unknown ids or an empty result.
std::vector<std::int32_t> resolve_enabled_nodes(
    const ProblemSpace& space, std::span<const std::string> enabled_nodes);

/// Visit neighbors in the deterministic order of enumerate_neighbors without
/// materializing them: fn(service_index, destination_node_index).
template <typename Fn>
void for_each_neighbor_move(const ProblemSpace& space, const Assignment& mu,
                            std::span<const std::int32_t> enabled_indices,
                            Fn&& fn) {
    for (std::size_t s : space.services_by_id()) {
        const std::int32_t from = mu.node_at(s);
        for (std::int32_t n : enabled_indices)
            if (n != from) fn(s, n);
    }
}

} // namespace drsop
