#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "drsop/fixtures.hpp"
#include "drsop/instance_io.hpp"
#include "drsop/model.hpp"
#include "test_support.hpp"

using namespace drsop;
using namespace drsop::testing;

namespace {

ProblemSpace paper() { return parse_instance(fixtures::paper_instance()); }

ProblemSpace test_one_space() { return restrict_services(paper(), 1, 20); }

/// Independent summation route: recompute a node's remaining resources via
/// id-keyed maps and plain accumulation, no shared code with the model op.
std::vector<Level> oracle_remaining(const ProblemSpace& space, const Assignment& mu,
                                    const std::string& node) {
    std::map<std::string, std::vector<Level>> demand;
    for (std::size_t s = 0; s < space.service_count(); ++s) {
        const std::string where = space.nodes()[mu.node_at(s)].id;
        auto& acc = demand[where];
        acc.resize(space.resource_count(), 0);
        for (std::size_t k = 0; k < space.resource_count(); ++k)
            acc[k] += space.services()[s].required.levels[k];
    }
    std::vector<Level> rem = space.nodes()[*space.node_index(node)].available.levels;
    if (auto it = demand.find(node); it != demand.end())
        for (std::size_t k = 0; k < rem.size(); ++k) rem[k] -= it->second[k];
    return rem;
}

} // namespace

TEST_CASE("services_on_node lists the initial occupants of node A in Test I") {
    const ProblemSpace space = test_one_space();
    const Assignment mu0 = initial_assignment(space);
    CHECK(services_on_node(space, mu0, "A") == std::vector<std::string>{"01", "04", "16"});
}

TEST_CASE("services_on_node on an unoccupied node is empty") {
    const ProblemSpace space = test_one_space();
    const Assignment mu0 = initial_assignment(space);
    CHECK(services_on_node(space, mu0, "H").empty());
}

TEST_CASE("services_on_node under a constant assignment returns every service") {
    const ProblemSpace space = make_space(
        {"cpu"}, {{"A", {9}}, {"B", {9}}},
        {{"x", "A", 1, {1}}, {"y", "A", 1, {1}}, {"z", "B", 1, {1}}});
    const Assignment all_b{{1, 1, 1}};
    CHECK(services_on_node(space, all_b, "B") == std::vector<std::string>{"x", "y", "z"});
    CHECK(services_on_node(space, all_b, "A").empty());
    CHECK_THROWS_AS(services_on_node(space, all_b, "Q"), InputError);
}

TEST_CASE("remaining_resources of node A hosting services 01, 04 and 16") {
    const ProblemSpace space = test_one_space();
    const Assignment mu0 = initial_assignment(space);
    CHECK(remaining_resources(space, mu0, "A") ==
          ResourceVector{{77, 6, 81, 65}}); // pinned against summation oracle
    CHECK(remaining_resources(space, mu0, "A").levels == oracle_remaining(space, mu0, "A"));
}

TEST_CASE("remaining_resources of an empty node is its available vector") {
    const ProblemSpace space = test_one_space();
    const Assignment mu0 = initial_assignment(space);
    CHECK(remaining_resources(space, mu0, "H") == space.nodes()[7].available);
}

TEST_CASE("remaining_resources reports negative components on overload") {
    const ProblemSpace space =
        make_space({"a", "b", "c", "d"}, {{"N", {5, 5, 5, 5}}},
                   {{"s", "N", 1, {6, 0, 0, 0}}});
    const Assignment mu{{0}};
    CHECK(remaining_resources(space, mu, "N") == ResourceVector{{-1, 5, 5, 5}});
    CHECK_FALSE(is_stable(space, mu));
}

TEST_CASE("remaining_resources agrees with the summation oracle on random spaces") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const ProblemSpace space = random_space(rng, 1 + rng.below(8), 1 + rng.below(4),
                                                1 + rng.below(4));
        const Assignment mu = random_total_assignment(rng, space);
        for (const auto& node : space.nodes())
            CHECK(remaining_resources(space, mu, node.id).levels ==
                  oracle_remaining(space, mu, node.id));
    }
}

TEST_CASE("is_stable is vacuous without services") {
    const ProblemSpace space = make_space({"cpu"}, {{"A", {0}}}, {});
    CHECK(is_stable(space, Assignment{{}}));
}

TEST_CASE("is_stable accepts boundary equality and rejects stacking") {
    const ProblemSpace space = make_space(
        {"a", "b", "c", "d"}, {{"X", {10, 10, 10, 10}}, {"Y", {10, 10, 10, 10}}},
        {{"s", "X", 1, {10, 10, 10, 10}}, {"t", "Y", 1, {10, 10, 10, 10}}});
    CHECK(is_stable(space, Assignment{{0, 1}}));
    CHECK_FALSE(is_stable(space, Assignment{{0, 0}}));
    CHECK_FALSE(is_stable(space, Assignment{{1, 1}}));
}

TEST_CASE("stability equals non-negativity of every remaining component") {
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const ProblemSpace space = random_space(rng, 1 + rng.below(8), 1 + rng.below(4),
                                                1 + rng.below(4));
        const Assignment mu = random_total_assignment(rng, space);
        Level min_component = 0;
        for (const auto& node : space.nodes())
            for (Level v : remaining_resources(space, mu, node.id).levels)
                min_component = std::min(min_component, v);
        CHECK(is_stable(space, mu) == (min_component >= 0));
    }
}

TEST_CASE("per_service_cost charges the migration cost exactly on moves") {
    const ProblemSpace space = test_one_space();
    const Assignment mu0 = initial_assignment(space);
    Assignment moved = mu0;
    moved.placement[*space.service_index("04")] =
        static_cast<std::int32_t>(*space.node_index("B"));
    CHECK(per_service_cost(space, mu0, moved, "04") == 17);
    CHECK(per_service_cost(space, mu0, moved, "01") == 0);
    CHECK(per_service_cost(space, mu0, mu0, "04") == 0);
    CHECK_THROWS_AS(per_service_cost(space, mu0, moved, "99"), InputError);
}

TEST_CASE("a homeless service pays its cost for any placement") {
    // Initial node G is undefined here, so the stay branch is unreachable.
    const ProblemSpace space = make_space(
        {"cpu"}, {{"A", {10}}, {"B", {10}}}, {{"s", "G", 7, {1}}});
    CHECK(space.initial_node_index(0) == -1);
    CHECK(initial_per_service_cost(space, Assignment{{0}}, "s") == 7);
    CHECK(initial_per_service_cost(space, Assignment{{1}}, "s") == 7);
    CHECK(initial_transformation_cost(space, Assignment{{0}}) == 7);
    CHECK_THROWS_AS(initial_assignment(space), InputError);
}

TEST_CASE("transformation_cost is zero on the identity") {
    const ProblemSpace space = test_one_space();
    const Assignment mu0 = initial_assignment(space);
    CHECK(transformation_cost(space, mu0, mu0) == 0);
}

TEST_CASE("transformation_cost sums the costs of moved services") {
    const ProblemSpace space = test_one_space();
    const Assignment mu0 = initial_assignment(space);
    Assignment mu1 = mu0;
    // 01 (cost 4) away from A, 02 (cost 5) away from C.
    mu1.placement[*space.service_index("01")] =
        static_cast<std::int32_t>(*space.node_index("B"));
    mu1.placement[*space.service_index("02")] =
        static_cast<std::int32_t>(*space.node_index("D"));
    CHECK(transformation_cost(space, mu0, mu1) == 9);
}

TEST_CASE("moving every Test I service off its node costs the full column sum") {
    const ProblemSpace space = test_one_space();
    const Assignment mu0 = initial_assignment(space);
    Assignment mu1 = mu0;
    for (std::size_t s = 0; s < space.service_count(); ++s)
        mu1.placement[s] = (mu0.node_at(s) + 1) % static_cast<std::int32_t>(space.node_count());
    CHECK(transformation_cost(space, mu0, mu1) == 114); // pinned sum, services 01-20
}

TEST_CASE("transformation_cost depends only on the endpoint pair") {
    Rng rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const ProblemSpace space = random_space(rng, 1 + rng.below(8), 2, 2);
        const Assignment a = random_total_assignment(rng, space);
        const Assignment b = random_total_assignment(rng, space);
        Cost per_service_sum = 0;
        Cost upper_bound = 0;
        for (const auto& svc : space.services()) {
            per_service_sum += per_service_cost(space, a, b, svc.id);
            upper_bound += svc.migration_cost;
        }
        const Cost direct = transformation_cost(space, a, b);
        CHECK(direct == per_service_sum);
        CHECK(direct <= upper_bound);
        CHECK(transformation_cost(space, a, a) == 0);
    }
}

TEST_CASE("are_neighbors counts differing services exactly") {
    const Assignment base{{0, 1, 2}};
    CHECK_FALSE(are_neighbors(base, base));
    CHECK(are_neighbors(base, Assignment{{0, 1, 0}}));
    CHECK_FALSE(are_neighbors(base, Assignment{{1, 1, 0}}));
    CHECK_THROWS_AS(are_neighbors(base, Assignment{{0, 1}}), InputError);
}

TEST_CASE("enumerate_neighbors yields 660 distinct one-move variants on the full fixture") {
    const ProblemSpace space = paper();
    const Assignment mu0 = initial_assignment(space);
    const auto neighbors = enumerate_neighbors(space, mu0, all_node_ids(space));
    REQUIRE(space.service_count() == 60);
    REQUIRE(space.node_count() == 12);
    CHECK(neighbors.size() == 660); // 60 x (12 - 1)

    std::set<std::vector<std::int32_t>> unique;
    for (const auto& n : neighbors) {
        CHECK(are_neighbors(mu0, n));
        unique.insert(n.placement);
    }
    CHECK(unique.size() == neighbors.size());
}

TEST_CASE("enumerate_neighbors is empty when nothing can move") {
    const ProblemSpace space = make_space({"cpu"}, {{"A", {5}}}, {{"s", "A", 1, {1}}});
    const std::vector<std::string> only{"A"};
    CHECK(enumerate_neighbors(space, initial_assignment(space), only).empty());
}

TEST_CASE("enumerate_neighbors order is service id, then destination id") {
    const ProblemSpace space = make_space(
        {"cpu"}, {{"A", {9}}, {"B", {9}}, {"C", {9}}},
        {{"p", "A", 1, {1}}, {"q", "B", 1, {1}}});
    const auto neighbors =
        enumerate_neighbors(space, initial_assignment(space), all_node_ids(space));
    REQUIRE(neighbors.size() == 4); // 2 services x (3 - 1)
    // p: A->B, A->C; then q: B->A, B->C.
    CHECK(neighbors[0].placement == std::vector<std::int32_t>{1, 1});
    CHECK(neighbors[1].placement == std::vector<std::int32_t>{2, 1});
    CHECK(neighbors[2].placement == std::vector<std::int32_t>{0, 0});
    CHECK(neighbors[3].placement == std::vector<std::int32_t>{0, 2});
}

TEST_CASE("neighbor counts follow the (enabled - 1) formula on random spaces") {
    Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 1 + rng.below(4);
        const ProblemSpace space = random_space(rng, 1 + rng.below(8), m, 1 + rng.below(3),
                                                /*homeless_share=*/0.0);
        const Assignment mu = random_total_assignment(rng, space);
        const auto neighbors = enumerate_neighbors(space, mu, all_node_ids(space));
        CHECK(neighbors.size() == space.service_count() * (m - 1));
        std::set<std::vector<std::int32_t>> unique;
        for (const auto& n : neighbors) {
            CHECK(are_neighbors(mu, n));
            unique.insert(n.placement);
        }
        CHECK(unique.size() == neighbors.size());
    }
}

TEST_CASE("assignment pair helpers validate totality") {
    const ProblemSpace space = stable_start_space();
    const std::vector<std::pair<std::string, std::string>> missing = {
        {"u", "X"}, {"v", "Y"}};
    CHECK_THROWS_AS(assignment_from_pairs(space, missing), InputError);

    const std::vector<std::pair<std::string, std::string>> twice = {
        {"u", "X"}, {"u", "Y"}, {"v", "Y"}, {"w", "X"}};
    CHECK_THROWS_AS(assignment_from_pairs(space, twice), InputError);

    const Assignment mu0 = initial_assignment(space);
    const auto pairs = assignment_to_pairs(space, mu0);
    CHECK(assignment_from_pairs(space, pairs) == mu0);
}

TEST_CASE("restrict_services keeps numeric ids in range") {
    const ProblemSpace sub = restrict_services(paper(), 1, 30);
    CHECK(sub.service_count() == 30);
    CHECK(sub.node_count() == 12);
    CHECK(sub.services().front().id == "01");
    CHECK(sub.services().back().id == "30");
    CHECK_THROWS_AS(restrict_services(sub, 5, 4), InputError);
}

TEST_CASE("resolve_enabled_nodes rejects unknown ids and empty sets") {
    const ProblemSpace space = stable_start_space();
    const std::vector<std::string> bad{"X", "Q"};
    const std::vector<std::string> none;
    CHECK_THROWS_AS(resolve_enabled_nodes(space, bad), InputError);
    CHECK_THROWS_AS(resolve_enabled_nodes(space, none), InputError);
}

TEST_CASE("problem space construction enforces its invariants") {
    CHECK_THROWS_AS(make_space({}, {{"A", {}}}, {}), InputError);
    CHECK_THROWS_AS(make_space({"c", "c"}, {{"A", {1, 1}}}, {}), InputError);
    CHECK_THROWS_AS(make_space({"c"}, {{"A", {1}}, {"A", {2}}}, {}), InputError);
    CHECK_THROWS_AS(make_space({"c"}, {{"A", {-1}}}, {}), InputError);
    CHECK_THROWS_AS(make_space({"c"}, {{"A", {1}}}, {{"s", "A", -2, {1}}}), InputError);
    CHECK_THROWS_AS(make_space({"c"}, {{"A", {1}}}, {{"s", "A", 1, {1, 2}}}), InputError);
}
