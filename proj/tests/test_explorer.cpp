#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "recolour/explorer.hpp"
#include "recolour/families.hpp"
#include "recolour/graph.hpp"

using namespace recolour;

TEST_CASE("enumerate_colourings is lexicographic and complete") {
    auto cols = enumerate_colourings(path(2), Palette::uniform(2));
    REQUIRE(cols.size() == 2);
    CHECK(cols[0] == Colouring{1, 2});
    CHECK(cols[1] == Colouring{2, 1});

    cols = enumerate_colourings(complete_bipartite(1, 1), Palette::lists(make_lists({{1}, {1}})));
    CHECK(cols.empty());

    cols = enumerate_colourings(path(3), Palette::uniform(3));
    CHECK(cols.size() == 12);
    CHECK(std::is_sorted(cols.begin(), cols.end()));
}

TEST_CASE("neighbours") {
    auto frozen = frozen_list_instance(5);
    CHECK(neighbours(frozen.graph, Palette::lists(frozen.lists), frozen.phi).empty());

    auto nb = neighbours(path(2), Palette::uniform(3), {1, 2});
    REQUIRE(nb.size() == 2);
    CHECK(nb[0] == Colouring{3, 2});
    CHECK(nb[1] == Colouring{1, 3});

    CHECK(neighbours(complete_bipartite(1, 2), Palette::uniform(2), {1, 2, 2}).empty());

    CHECK_THROWS_AS(neighbours(path(2), Palette::uniform(2), Colouring{1, 1}), std::invalid_argument);
}

TEST_CASE("distance") {
    Graph g = complete_bipartite(1, 2);
    const Palette u2 = Palette::uniform(2);
    const Palette u3 = Palette::uniform(3);

    auto same = distance(g, u3, {1, 2, 3}, {1, 2, 3});
    CHECK(same.status == DistanceResult::Status::reached);
    CHECK(same.distance == 0);

    auto unreachable = distance(g, u2, {1, 2, 2}, {2, 1, 1});
    CHECK(unreachable.status == DistanceResult::Status::unreachable);

    auto far = distance(g, u3, {1, 2, 3}, {2, 1, 1});
    REQUIRE(far.status == DistanceResult::Status::reached);
    CHECK(far.distance == 4);
    REQUIRE(far.witness);
    auto report = verify_sequence(g, u3, *far.witness, {2, 1, 1});
    CHECK(report.valid);
    CHECK(report.length == 4);
}

TEST_CASE("distance is symmetric and triangular on a small instance") {
    Graph g = complete_bipartite(2, 2);
    const Palette p = Palette::uniform(3);
    auto cols = enumerate_colourings(g, p);
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
        const auto &a = cols[pick(rng)], &b = cols[pick(rng)], &c = cols[pick(rng)];
        auto ab = distance(g, p, a, b);
        auto ba = distance(g, p, b, a);
        auto ac = distance(g, p, a, c);
        auto cb = distance(g, p, c, b);
        REQUIRE(ab.status == DistanceResult::Status::reached);
        CHECK(ab.distance == ba.distance);
        CHECK(ab.distance <= ac.distance + cb.distance);
        REQUIRE(ab.witness);
        CHECK(verify_sequence(g, p, *ab.witness, b).valid);
        CHECK(ab.witness->length() == ab.distance);
    }
}

TEST_CASE("components") {
    auto disconnected = components(complete_bipartite_minus_matching(4), Palette::uniform(4));
    CHECK(disconnected.component_count > 1);

    auto connected = components(complete_bipartite_minus_matching(4), Palette::uniform(3));
    CHECK(connected.component_count == 1);

    auto two = components(complete_bipartite(3, 3), Palette::uniform(2));
    CHECK(two.node_count == 2);
    CHECK(two.component_count == 2);
    CHECK(two.sizes == std::vector<std::uint64_t>{1, 1});

    std::uint64_t total = 0;
    for (auto s : disconnected.sizes)
        total += s;
    CHECK(total == disconnected.node_count);
}

TEST_CASE("metrics on small instances") {
    auto report = metrics(path(2), Palette::uniform(3));
    CHECK(report.node_count == 6);
    CHECK(report.connected);
    CHECK(report.diameter == 3); // C_3(P_2) is a 6-cycle
    CHECK(report.radius == 3);
    REQUIRE(report.witness_pair);

    for (int p = 1; p <= 3; ++p)
        for (int q = p; q <= 3; ++q) {
            auto r = metrics(complete_bipartite(p, q), Palette::uniform(3), true);
            REQUIRE(r.diameter);
            CHECK(*r.diameter == static_cast<std::uint64_t>(3 * (p + q) / 2));
        }

    CHECK_THROWS_AS(metrics(path(2), Palette::lists(make_lists({{1, 2}, {2, 3}})), true), std::invalid_argument);
}

TEST_CASE("metrics with and without colour symmetry agree") {
    struct Case {
        Graph g;
        int k;
    };
    const Case cases[] = {{path(4), 3}, {complete_bipartite(2, 3), 3}, {complete_bipartite(2, 2), 4},
                          {complete_bipartite_minus_matching(3), 4}};
    for (const auto& c : cases) {
        auto fast = metrics(c.g, Palette::uniform(c.k), true);
        auto slow = metrics(c.g, Palette::uniform(c.k), false);
        CHECK(fast.diameter == slow.diameter);
        CHECK(fast.radius == slow.radius);
        CHECK(fast.node_count == slow.node_count);
        CHECK(fast.component_count == slow.component_count);
    }
}

TEST_CASE("metrics is deterministic across worker counts") {
    ExplorerOptions one, many;
    one.workers = 1;
    many.workers = 4;
    auto a = metrics(complete_bipartite(2, 3), Palette::uniform(4), true, one);
    auto b = metrics(complete_bipartite(2, 3), Palette::uniform(4), true, many);
    CHECK(a.diameter == b.diameter);
    CHECK(a.radius == b.radius);
    REQUIRE(a.witness_pair);
    REQUIRE(b.witness_pair);
    CHECK(a.witness_pair->first == b.witness_pair->first);
    CHECK(a.witness_pair->second == b.witness_pair->second);
}

TEST_CASE("diameter stays within 2n when k >= max degree + 2") {
    const Graph cases[] = {path(4), complete_bipartite(1, 3), complete_bipartite(2, 2)};
    for (const Graph& g : cases) {
        int max_deg = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            max_deg = std::max(max_deg, g.degree(v));
        auto r = metrics(g, Palette::uniform(max_deg + 2), true);
        REQUIRE(r.diameter);
        CHECK(*r.diameter <= 2 * static_cast<std::uint64_t>(g.vertex_count()));
    }
}

TEST_CASE("budget exhaustion is reported, never a wrong answer") {
    ExplorerOptions tiny;
    tiny.state_budget = 3;
    auto m = metrics(path(3), Palette::uniform(3), false, tiny);
    CHECK(m.status == SearchStatus::budget_exhausted);
    auto d = distance(path(3), Palette::uniform(3), {1, 2, 1}, {2, 1, 2}, tiny);
    CHECK(d.status == DistanceResult::Status::budget_exhausted);
}

TEST_CASE("RECOLOUR_BUDGET environment override") {
    CHECK(ExplorerOptions().state_budget == 100'000'000ULL);
    CHECK(ExplorerOptions().search_budget == 1'000'000'000ULL);
    setenv("RECOLOUR_BUDGET", "5", 1);
    CHECK(ExplorerOptions().state_budget == 5);
    CHECK(ExplorerOptions().search_budget == 5);
    setenv("RECOLOUR_BUDGET", "junk", 1);
    CHECK(ExplorerOptions().state_budget == 100'000'000ULL);
    unsetenv("RECOLOUR_BUDGET");
}

TEST_CASE("hamiltonian cycle") {
    auto hexagon = hamiltonian_cycle(path(2), Palette::uniform(3));
    REQUIRE(hexagon.status == HamiltonianResult::Status::found);
    CHECK(hexagon.cycle.size() == 6);

    auto none = hamiltonian_cycle(complete_bipartite_minus_matching(4), Palette::uniform(4));
    CHECK(none.status == HamiltonianResult::Status::none);
}

TEST_CASE("verify_sequence") {
    Graph g = complete_bipartite(1, 2);
    const Palette p = Palette::uniform(3);

    auto empty = verify_sequence(g, p, RecolouringSequence{{1, 2, 3}, {}}, {1, 2, 3});
    CHECK(empty.valid);
    CHECK(empty.length == 0);

    RecolouringSequence walk{{1, 2, 3}, {{1, 3}, {0, 2}, {1, 1}, {2, 1}}};
    auto report = verify_sequence(g, p, walk, {2, 1, 1});
    CHECK(report.valid);
    CHECK(report.length == 4);
    CHECK(report.per_vertex_counts == std::vector<int>{1, 2, 1});

    // A step recolouring a vertex to its current colour is invalid.
    RecolouringSequence noop{{1, 2, 3}, {{0, 1}}};
    report = verify_sequence(g, p, noop, {1, 2, 3});
    CHECK_FALSE(report.valid);
    REQUIRE(report.failure_step);
    CHECK(*report.failure_step == 0);

    // Properness violations are caught at the right step.
    RecolouringSequence crash{{1, 2, 3}, {{1, 3}, {1, 2}, {0, 2}}};
    report = verify_sequence(g, p, crash, {2, 2, 3});
    CHECK_FALSE(report.valid);
    REQUIRE(report.failure_step);
    CHECK(*report.failure_step == 2);

    // Valid prefix that misses the target.
    RecolouringSequence off{{1, 2, 3}, {{1, 3}}};
    report = verify_sequence(g, p, off, {1, 2, 3});
    CHECK_FALSE(report.valid);
    CHECK_FALSE(report.failure_step);
    CHECK_FALSE(report.target_reached);
}

TEST_CASE("frozen colourings are exactly the isolated nodes") {
    // Cross-module oracle check on small instances.
    struct Case {
        Graph g;
        Palette p;
    };
    const Case cases[] = {{path(3), Palette::uniform(3)},
                          {complete_bipartite_minus_matching(3), Palette::uniform(3)},
                          {complete_bipartite(2, 2), Palette::uniform(3)}};
    for (const auto& c : cases) {
        for (const Colouring& col : enumerate_colourings(c.g, c.p))
            CHECK(is_frozen(c.g, col, c.p) == neighbours(c.g, c.p, col).empty());
    }
}
