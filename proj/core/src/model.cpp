#include "drsop/model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace drsop {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

std::size_t checked_service(const ProblemSpace& space, std::string_view id) {
    auto idx = space.service_index(id);
    require(idx.has_value(), "unknown service id '" + std::string(id) + "'");
    return *idx;
}

std::size_t checked_node(const ProblemSpace& space, std::string_view id) {
    auto idx = space.node_index(id);
    require(idx.has_value(), "unknown node id '" + std::string(id) + "'");
    return *idx;
}

void check_total(const ProblemSpace& space, const Assignment& mu) {
    require(mu.size() == space.service_count(),
            "assignment is not total over the space's services");
    for (std::int32_t n : mu.placement)
        require(n >= 0 && static_cast<std::size_t>(n) < space.node_count(),
                "assignment maps to a node index outside the space");
}

void check_same_services(const Assignment& a, const Assignment& b) {
    require(a.size() == b.size(), "assignments cover different service sets");
}

} // namespace

ProblemSpace::ProblemSpace(ResourceKindList kinds, std::vector<NodeSpec> nodes,
                           std::vector<ServiceSpec> services)
    : kinds_(std::move(kinds)), nodes_(std::move(nodes)), services_(std::move(services)) {
    const std::size_t d = kinds_.size();
    require(d >= 1, "a problem space needs at least one resource kind");

    std::unordered_set<std::string> seen;
    for (const auto& k : kinds_.kinds) {
        require(!k.empty(), "resource kind names must be non-empty");
        require(seen.insert(k).second, "duplicate resource kind '" + k + "'");
    }

    seen.clear();
    for (const auto& n : nodes_) {
        require(!n.id.empty(), "node ids must be non-empty");
        require(seen.insert(n.id).second, "duplicate node id '" + n.id + "'");
        require(n.available.size() == d, "node '" + n.id + "' has a resource vector of wrong length");
        for (Level v : n.available.levels)
            require(v >= 0, "node '" + n.id + "' has a negative resource level");
    }

    seen.clear();
    for (const auto& s : services_) {
        require(!s.id.empty(), "service ids must be non-empty");
        require(seen.insert(s.id).second, "duplicate service id '" + s.id + "'");
        require(s.required.size() == d, "service '" + s.id + "' has a resource vector of wrong length");
        require(s.migration_cost >= 0, "service '" + s.id + "' has a negative migration cost");
        for (Level v : s.required.levels)
            require(v >= 0, "service '" + s.id + "' has a negative resource level");
    }

    services_by_id_.resize(services_.size());
    std::iota(services_by_id_.begin(), services_by_id_.end(), std::size_t{0});
    std::sort(services_by_id_.begin(), services_by_id_.end(),
              [this](std::size_t a, std::size_t b) { return services_[a].id < services_[b].id; });

    nodes_by_id_.resize(nodes_.size());
    std::iota(nodes_by_id_.begin(), nodes_by_id_.end(), std::size_t{0});
    std::sort(nodes_by_id_.begin(), nodes_by_id_.end(),
              [this](std::size_t a, std::size_t b) { return nodes_[a].id < nodes_[b].id; });

    initial_index_.reserve(services_.size());
    for (const auto& s : services_) {
        auto idx = node_index(s.initial_node);
        initial_index_.push_back(idx ? static_cast<std::int32_t>(*idx) : -1);
    }
}

std::optional<std::size_t> ProblemSpace::node_index(std::string_view id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].id == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> ProblemSpace::service_index(std::string_view id) const {
    for (std::size_t i = 0; i < services_.size(); ++i)
        if (services_[i].id == id) return i;
    return std::nullopt;
}

bool ProblemSpace::operator==(const ProblemSpace& other) const {
    return kinds_ == other.kinds_ && nodes_ == other.nodes_ && services_ == other.services_;
}

Assignment assignment_from_pairs(
    const ProblemSpace& space,
    std::span<const std::pair<std::string, std::string>> pairs) {
    std::vector<std::int32_t> placement(space.service_count(), -1);
    for (const auto& [service, node] : pairs) {
        const std::size_t s = checked_service(space, service);
        const std::size_t n = checked_node(space, node);
        require(placement[s] == -1, "service '" + service + "' assigned twice");
        placement[s] = static_cast<std::int32_t>(n);
    }
    for (std::size_t s = 0; s < placement.size(); ++s)
        require(placement[s] != -1,
                "assignment misses service '" + space.services()[s].id + "'");
    return Assignment{std::move(placement)};
}

std::vector<std::pair<std::string, std::string>> assignment_to_pairs(
    const ProblemSpace& space, const Assignment& mu) {
    check_total(space, mu);
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(mu.size());
    for (std::size_t s : space.services_by_id())
        out.emplace_back(space.services()[s].id, space.nodes()[mu.node_at(s)].id);
    return out;
}

Assignment initial_assignment(const ProblemSpace& space) {
    std::vector<std::int32_t> placement;
    placement.reserve(space.service_count());
    for (std::size_t s = 0; s < space.service_count(); ++s) {
        const std::int32_t n = space.initial_node_index(s);
        require(n >= 0, "service '" + space.services()[s].id +
                            "' declares initial node '" + space.services()[s].initial_node +
                            "' which the space does not define");
        placement.push_back(n);
    }
    return Assignment{std::move(placement)};
}

std::vector<std::string> services_on_node(const ProblemSpace& space,
                                          const Assignment& mu,
                                          std::string_view node) {
    const auto n = static_cast<std::int32_t>(checked_node(space, node));
    check_total(space, mu);
    std::vector<std::string> out;
    for (std::size_t s : space.services_by_id())
        if (mu.node_at(s) == n) out.push_back(space.services()[s].id);
    return out;
}

ResourceVector remaining_resources(const ProblemSpace& space,
                                   const Assignment& mu,
                                   std::string_view node) {
    const std::size_t n = checked_node(space, node);
    check_total(space, mu);
    ResourceVector rem = space.nodes()[n].available;
    for (std::size_t s = 0; s < mu.size(); ++s) {
        if (static_cast<std::size_t>(mu.node_at(s)) != n) continue;
        const auto& req = space.services()[s].required.levels;
        for (std::size_t k = 0; k < req.size(); ++k) rem.levels[k] -= req[k];
    }
    return rem;
}

bool is_stable(const ProblemSpace& space, const Assignment& mu) {
    check_total(space, mu);
    const std::size_t d = space.resource_count();
    std::vector<Level> remaining(space.node_count() * d);
    for (std::size_t n = 0; n < space.node_count(); ++n) {
        const auto& avail = space.nodes()[n].available.levels;
        std::copy(avail.begin(), avail.end(), remaining.begin() + n * d);
    }
    for (std::size_t s = 0; s < mu.size(); ++s) {
        const auto& req = space.services()[s].required.levels;
        Level* slot = remaining.data() + static_cast<std::size_t>(mu.node_at(s)) * d;
        for (std::size_t k = 0; k < d; ++k) slot[k] -= req[k];
    }
    return std::all_of(remaining.begin(), remaining.end(), [](Level v) { return v >= 0; });
}

Cost per_service_cost(const ProblemSpace& space, const Assignment& mu0,
                      const Assignment& mu1, std::string_view service) {
    const std::size_t s = checked_service(space, service);
    check_total(space, mu0);
    check_total(space, mu1);
    return mu0.node_at(s) == mu1.node_at(s) ? 0 : space.services()[s].migration_cost;
}

Cost transformation_cost(const ProblemSpace& space, const Assignment& mu0,
                         const Assignment& mu1) {
    check_same_services(mu0, mu1);
    check_total(space, mu0);
    check_total(space, mu1);
    Cost total = 0;
    for (std::size_t s = 0; s < mu0.size(); ++s)
        if (mu0.node_at(s) != mu1.node_at(s)) total += space.services()[s].migration_cost;
    return total;
}

Cost initial_per_service_cost(const ProblemSpace& space, const Assignment& mu,
                              std::string_view service) {
    const std::size_t s = checked_service(space, service);
    check_total(space, mu);
    return mu.node_at(s) == space.initial_node_index(s) ? 0
                                                        : space.services()[s].migration_cost;
}

Cost initial_transformation_cost(const ProblemSpace& space, const Assignment& mu) {
    check_total(space, mu);
    Cost total = 0;
    for (std::size_t s = 0; s < mu.size(); ++s)
        if (mu.node_at(s) != space.initial_node_index(s))
            total += space.services()[s].migration_cost;
    return total;
}

bool are_neighbors(const Assignment& mu0, const Assignment& mu1) {
    check_same_services(mu0, mu1);
    std::size_t diff = 0;
    for (std::size_t s = 0; s < mu0.size(); ++s)
        if (mu0.node_at(s) != mu1.node_at(s) && ++diff > 1) return false;
    return diff == 1;
}

std::vector<Assignment> enumerate_neighbors(
    const ProblemSpace& space, const Assignment& mu,
    std::span<const std::string> enabled_nodes) {
    check_total(space, mu);
    const auto enabled = resolve_enabled_nodes(space, enabled_nodes);
    std::vector<Assignment> out;
    for_each_neighbor_move(space, mu, enabled, [&](std::size_t s, std::int32_t n) {
        Assignment next = mu;
        next.placement[s] = n;
        out.push_back(std::move(next));
    });
    return out;
}

ProblemSpace restrict_services(const ProblemSpace& space, std::int64_t first,
                               std::int64_t last) {
    require(first <= last, "empty service range");
    return filter_services(space, [&](const ServiceSpec& s) {
        std::int64_t value = 0;
        const char* begin = s.id.data();
        const char* end = begin + s.id.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        return ec == std::errc() && ptr == end && value >= first && value <= last;
    });
}

std::vector<std::int32_t> resolve_enabled_nodes(
    const ProblemSpace& space, std::span<const std::string> enabled_nodes) {
    std::vector<std::int32_t> indices;
    indices.reserve(enabled_nodes.size());
    std::unordered_set<std::int32_t> seen;
    for (const auto& id : enabled_nodes) {
        const auto n = static_cast<std::int32_t>(checked_node(space, id));
        if (seen.insert(n).second) indices.push_back(n);
    }
    require(!indices.empty(), "enabled node set is empty");
    std::sort(indices.begin(), indices.end(), [&](std::int32_t a, std::int32_t b) {
        return space.nodes()[a].id < space.nodes()[b].id;
    });
    return indices;
}

} // namespace drsop
