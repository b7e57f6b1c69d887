#include <doctest.h>

#include <random>

#include "cpl/graph.hpp"
#include "cpl/params.hpp"
#include "oracles.hpp"

using namespace cpl;

TEST_CASE("graph basics") {
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.degree(0) == 1);
    g.remove_edge(2, 0);
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.has_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("edge count is half the degree sum, adjacency symmetric") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(70, 0.4, rng);  // spans multiple words
        long long degsum = 0;
        for (int v = 0; v < g.order(); ++v) degsum += g.degree(v);
        CHECK(g.edge_count() * 2 == degsum);
        for (auto [u, v] : g.edges()) {
            CHECK(u != v);
            CHECK(g.has_edge(v, u));
        }
    }
}

TEST_CASE("cycle") {
    CHECK(cycle(3).edge_count() == 3);
    Graph c5 = cycle(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    Graph c8 = cycle(8);
    for (int i = 0; i < 8; ++i) {
        CHECK(c8.has_edge(i, (i + 1) % 8));
        CHECK(distance(c8, 0, i) == std::min(i, 8 - i));
    }
}

TEST_CASE("distance agrees with Floyd-Warshall on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(12, 0.2, rng);
        auto d = oracle::all_distances(g);
        for (int u = 0; u < 12; ++u)
            for (int v = 0; v < 12; ++v) CHECK(distance(g, u, v) == d[u][v]);
    }
    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    CHECK(distance(two_k2, 0, 2) == kUnreachable);
    CHECK(distance(two_k2, 1, 1) == 0);
    CHECK_THROWS_AS(distance(two_k2, 0, 9), std::out_of_range);
}

TEST_CASE("power semantics: edge iff distance in 1..p") {
    CHECK(power(cycle(5), 2) == complete_graph(5));
    Graph c8p2 = power(cycle(8), 2);
    CHECK(c8p2.edge_count() == 16);
    for (int v = 0; v < 8; ++v) CHECK(c8p2.degree(v) == 4);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(10, 0.25, rng);
        CHECK(power(g, 1) == g);
        auto d = oracle::all_distances(g);
        for (int p = 2; p <= 4; ++p) {
            Graph gp = power(g, p);
            for (int u = 0; u < 10; ++u)
                for (int v = u + 1; v < 10; ++v)
                    CHECK(gp.has_edge(u, v) == (d[u][v] != -1 && d[u][v] <= p));
        }
        // beyond the diameter, each component becomes a clique
        Graph g10 = power(g, 10);
        for (const auto& comp : components(g))
            for (size_t i = 0; i < comp.size(); ++i)
                for (size_t j = i + 1; j < comp.size(); ++j)
                    CHECK(g10.has_edge(comp[i], comp[j]));
    }
    CHECK_THROWS_AS(power(cycle(5), 0), std::invalid_argument);
}

TEST_CASE("cycle_power is 2p-regular when k >= 2p+1") {
    for (int p = 1; p <= 4; ++p)
        for (int k = 2 * p + 1; k <= 15; ++k) {
            Graph g = cycle_power(k, p);
            for (int v = 0; v < k; ++v) CHECK(g.degree(v) == 2 * p);
        }
}

TEST_CASE("join") {
    CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
    Graph t93 = turan(9, 3);
    CHECK(join(empty_graph(0), t93) == t93);
    CHECK(join(complete_graph(1), t93).edge_count() == 36);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracle::random_graph(6, 0.5, rng);
        Graph h = oracle::random_graph(5, 0.5, rng);
        Graph j = join(g, h);
        CHECK(j.edge_count() == g.edge_count() + h.edge_count() + 30);
        // both sides keep their internal adjacency
        for (int u = 0; u < 6; ++u)
            for (int v = 0; v < 5; ++v) CHECK(j.has_edge(u, 6 + v));
    }
}

TEST_CASE("turan part sizes balanced, largest first") {
    CHECK(turan(6, 3).edge_count() == 12);
    CHECK(turan(7, 4).edge_count() == 18);
    CHECK(turan(9, 1).edge_count() == 0);
    for (int n = 0; n <= 20; ++n)
        for (int r = 1; r <= 6; ++r) {
            Graph g = turan(n, r);
            CHECK(g.order() == n);
            CHECK(g.edge_count() == oracle::turan_edges(n, r));
            // degrees take at most two values differing by at most 1
            if (n > 0) {
                int lo = n, hi = 0;
                for (int v = 0; v < n; ++v) {
                    lo = std::min(lo, g.degree(v));
                    hi = std::max(hi, g.degree(v));
                }
                CHECK(hi - lo <= 1);
            }
        }
    CHECK_THROWS_AS(turan(5, 0), std::invalid_argument);
}

TEST_CASE("complete_multipartite") {
    CHECK(complete_multipartite({1, 1, 1}) == complete_graph(3));
    CHECK(complete_multipartite({2, 3}).edge_count() == 6);
    CHECK(complete_multipartite({3, 3, 3}) == turan(9, 3));
    CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("extremal_construction") {
    CHECK(extremal_construction(10, 11, 2).edge_count() == 36);  // K_1 v T_{9,3}
    CHECK(extremal_construction(9, 7, 2) == turan(9, 3));        // t = 1
    CHECK(extremal_construction(8, 5, 2) == turan(8, 4));
    CHECK_THROWS_AS(extremal_construction(20, 9, 2), NotApplicable);  // r = 0
    CHECK_THROWS_AS(extremal_construction(2, 7, 2), std::invalid_argument);
}

TEST_CASE("components") {
    Graph g(6);
    g.add_edge(0, 3);
    g.add_edge(3, 5);
    g.add_edge(1, 2);
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 3, 5});
    CHECK(comps[1] == std::vector<int>{1, 2});
    CHECK(comps[2] == std::vector<int>{4});
}

TEST_CASE("vertex partition validation") {
    VertexPartition p = VertexPartition::single_block(4);
    CHECK_NOTHROW(p.validate(4));
    p.blocks.push_back({});
    CHECK_THROWS_AS(p.validate(4), std::invalid_argument);
    p.blocks.back() = {3};
    CHECK_THROWS_AS(p.validate(4), std::invalid_argument);  // overlap
    p.blocks = {{0, 1}, {3}};
    CHECK_THROWS_AS(p.validate(4), std::invalid_argument);  // missing 2
    p.blocks = {{0, 1}, {2, 5}};
    CHECK_THROWS_AS(p.validate(4), std::invalid_argument);  // out of range
}

TEST_CASE("graph6 frozen encodings") {
    CHECK(graph6_encode(complete_graph(3)) == "Bw");
    CHECK(graph6_encode(empty_graph(1)) == "@");
    CHECK(graph6_decode("Bw") == complete_graph(3));
    CHECK(graph6_decode("@") == empty_graph(1));
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937 rng(19);
    for (int n = 0; n <= 12; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            Graph g = oracle::random_graph(n, 0.5, rng);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
    // long form header for n > 62
    Graph big = oracle::random_graph(70, 0.3, rng);
    CHECK(graph6_decode(graph6_encode(big)) == big);
}

TEST_CASE("graph6 decode errors carry a byte offset") {
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("B"), Graph6Error);        // truncated payload
    CHECK_THROWS_AS(graph6_decode("B\x01"), Graph6Error);    // byte below printable range
    CHECK_THROWS_AS(graph6_decode("Bw?"), Graph6Error);      // trailing junk
    try {
        graph6_decode("B\x01");
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(e.byte_offset == 1);
    }
}

TEST_CASE("to_dot lists every vertex and edge") {
    std::string dot = to_dot(cycle_power(7, 2));
    for (int v = 0; v < 7; ++v)
        CHECK(dot.find("v" + std::to_string(v) + ";") != std::string::npos);
    size_t count = 0, pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++count;
        pos += 4;
    }
    CHECK(count == 14);
}
