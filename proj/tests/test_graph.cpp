#include <catch2/catch_amalgamated.hpp>

#include "antimagic/graph.hpp"

#include <random>

using namespace antimagic;

namespace {

// Apply a vertex permutation (and shuffle edge order); component statistics
// must not depend on either.
Graph relabeled(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.vertex_count);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h;
    h.vertex_count = g.vertex_count;
    for (const auto& [u, v] : g.edges) h.edges.emplace_back(perm[u], perm[v]);
    std::shuffle(h.edges.begin(), h.edges.end(), rng);
    return h;
}

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count < 3 || g.edge_count() != g.vertex_count) return false;
    for (int d : degrees(g))
        if (d != 2) return false;
    return summarize_components(g).component_count == 1;
}

}  // namespace

TEST_CASE("builders follow their definitions") {
    const Graph c3 = cycle(3);
    REQUIRE(c3.vertex_count == 3);
    REQUIRE(c3.edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});

    const Graph j = jellyfish(3, 11);
    CHECK(j.vertex_count == 36);
    CHECK(j.edge_count() == 36);
    CHECK(summarize_components(j).internal_edge_count == 3);

    const Graph u = disjoint_union(cycle(3), t_paths3(6));
    CHECK(u.vertex_count == 21);
    CHECK(u.edge_count() == 15);

    CHECK_THROWS_AS(cycle(2), std::domain_error);
    CHECK_THROWS_AS(star(0), std::domain_error);
    CHECK_THROWS_AS(jellyfish(2, 5), std::domain_error);

    // degenerate builders are allowed
    CHECK(star(1).edge_count() == 1);
    CHECK(star(2).edge_count() == 2);
}

TEST_CASE("component summaries") {
    const auto two_p3 = summarize_components(t_paths3(2));
    CHECK(two_p3.component_count == 2);
    CHECK(two_p3.p3_count == 2);
    CHECK(two_p3.internal_edge_count == 0);

    const auto jf = summarize_components(jellyfish(3, 11));
    CHECK(jf.component_count == 1);
    CHECK(jf.p3_count == 0);
    CHECK(jf.internal_edge_count == 3);

    const auto ds = summarize_components(double_star(2, 2));
    CHECK(ds.component_count == 1);
    CHECK(ds.p3_count == 0);
    CHECK(ds.internal_edge_count == 1);

    const auto p2 = summarize_components(path_graph(2));
    CHECK(p2.has_p2);

    Graph iso;  // two isolated vertices
    iso.vertex_count = 2;
    CHECK(summarize_components(iso).isolated_vertex_count == 2);
}

TEST_CASE("component summary is invariant under relabeling") {
    std::mt19937 rng(7);
    const std::vector<Graph> corpus = {
        cycle(6), jellyfish(4, 3), disjoint_union(cycle(3), t_paths3(4)),
        double_star(3, 5), disjoint_union(star(4), path_graph(2))};
    for (const auto& g : corpus) {
        const auto base = summarize_components(g);
        for (int trial = 0; trial < 20; ++trial) {
            const auto s = summarize_components(relabeled(g, rng));
            CHECK(s.component_count == base.component_count);
            CHECK(s.p3_count == base.p3_count);
            CHECK(s.has_p2 == base.has_p2);
            CHECK(s.isolated_vertex_count == base.isolated_vertex_count);
            CHECK(s.internal_edge_count == base.internal_edge_count);
        }
    }
}

TEST_CASE("handshake identity over builder outputs") {
    const std::vector<Graph> corpus = {cycle(5),       path_graph(7), star(6),
                                       double_star(4, 2), jellyfish(5, 2), t_paths3(3)};
    for (const auto& g : corpus) {
        long long total = 0;
        for (int d : degrees(g)) total += d;
        CHECK(total == 2LL * g.edge_count());
    }
}

TEST_CASE("subdivide") {
    const Graph c3 = cycle(3);

    SECTION("p=1 is the identity") {
        const auto sub = subdivide(c3, 0, 1);
        CHECK(sub.graph.edges == c3.edges);
        CHECK(sub.edge_map[0] == std::vector<int>{0});
    }

    SECTION("one split of a cycle edge gives C4") {
        const auto sub = subdivide(c3, 1, 2);
        CHECK(sub.graph.vertex_count == 4);
        CHECK(sub.graph.edge_count() == 4);
        CHECK(is_cycle_graph(sub.graph));
        // chain orientation: first mapped edge touches u, last touches v
        const auto [u, v] = c3.edges[1];
        CHECK(sub.graph.edges[sub.edge_map[1].front()].first == u);
        CHECK(sub.graph.edges[sub.edge_map[1].back()].second == v);
    }

    SECTION("p = n-2 splits of one edge give C_n") {
        for (int n = 3; n <= 8; ++n) {
            const auto sub = subdivide(c3, 2, n - 2);
            CHECK(sub.graph.vertex_count == n);
            CHECK(is_cycle_graph(sub.graph));
        }
    }

    SECTION("vertex and edge counts") {
        for (int p = 1; p <= 5; ++p) {
            const auto sub = subdivide(jellyfish(3, 2), 4, p);
            CHECK(sub.graph.vertex_count == 9 + p - 1);
            CHECK(sub.graph.edge_count() == 9 + p - 1);
        }
    }

    SECTION("errors") {
        CHECK_THROWS_AS(subdivide(c3, 3, 2), std::out_of_range);
        CHECK_THROWS_AS(subdivide(c3, 0, 0), std::domain_error);
    }
}

TEST_CASE("graph validation rejects bad input") {
    CHECK_THROWS_AS(make_graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::invalid_argument);
}
