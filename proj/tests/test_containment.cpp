#include <doctest.h>

#include <random>

#include "cpl/coloring.hpp"
#include "cpl/containment.hpp"
#include "cpl/graph.hpp"
#include "cpl/params.hpp"
#include "oracles.hpp"

using namespace cpl;

TEST_CASE("contains frozen cases") {
    Graph c72 = cycle_power(7, 2);
    auto emb = contains(complete_graph(7), c72);
    REQUIRE(emb.has_value());
    CHECK(is_valid_embedding(complete_graph(7), c72, *emb));
    CHECK_FALSE(contains(turan(9, 3), c72).has_value());
    CHECK_FALSE(contains(extremal_construction(12, 11, 2), cycle_power(11, 2)).has_value());
    CHECK(contains(cycle(5), Graph(0)).has_value());  // empty pattern embeds trivially
}

TEST_CASE("contains agrees with plain injection enumeration") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 120; ++trial) {
        Graph host = oracle::random_graph(8, 0.45, rng);
        Graph pattern = oracle::random_graph(5, 0.5, rng);
        auto emb = contains(host, pattern);
        CHECK(emb.has_value() == oracle::brute_contains(host, pattern));
        if (emb) CHECK(is_valid_embedding(host, pattern, *emb));
    }
}

TEST_CASE("is_valid_embedding rejects malformed maps") {
    Graph host = complete_graph(4);
    Graph pat = complete_graph(3);
    CHECK(is_valid_embedding(host, pat, {0, 1, 2}));
    CHECK_FALSE(is_valid_embedding(host, pat, {0, 1}));      // wrong size
    CHECK_FALSE(is_valid_embedding(host, pat, {0, 1, 1}));   // not injective
    CHECK_FALSE(is_valid_embedding(host, pat, {0, 1, 9}));   // out of range
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(is_valid_embedding(path, pat, {0, 1, 2}));   // missing host edge
}

TEST_CASE("is_free basics") {
    CHECK_FALSE(is_free(complete_graph(7), 7, 2));
    CHECK_FALSE(is_free(complete_graph(5), 5, 1));
    CHECK(is_free(complete_graph(6), 7, 2));  // too few vertices
    CHECK(is_free(turan(15, 3), 7, 2));
    CHECK_THROWS_AS(is_free(complete_graph(3), 2, 1), std::invalid_argument);
}

TEST_CASE("freeness is monotone under edge addition") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(9, 0.6, rng);
        if (is_free(g, 5, 1)) continue;
        std::uniform_int_distribution<int> pick(0, 8);
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        Graph h = g;
        h.add_edge(u, v);
        CHECK_FALSE(is_free(h, 5, 1));
    }
}

TEST_CASE("complete-regime freeness matches clique containment") {
    std::mt19937 rng(37);
    Graph k5 = complete_graph(5);
    for (int trial = 0; trial < 60; ++trial) {
        Graph host = oracle::random_graph(8, 0.7, rng);
        // p >= floor(k/2) makes the 5-vertex pattern a clique
        CHECK(is_free(host, 5, 2) == !oracle::brute_contains(host, k5));
    }
}

TEST_CASE("low chromatic number certifies freeness") {
    std::mt19937 rng(41);
    auto q = decompose(7, 2);
    REQUIRE(q.chi_predicted == 4);
    for (int trial = 0; trial < 60; ++trial) {
        Graph host = oracle::random_graph(10, 0.4, rng);
        if (chromatic_number(host) <= q.chi_predicted - 1)
            CHECK(is_free(host, 7, 2));
    }
}

TEST_CASE("embeds_through_edge matches the before/after containment delta") {
    std::mt19937 rng(43);
    Graph pattern = cycle_power(5, 1);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g(7);
        auto slots = std::vector<std::pair<int, int>>{};
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v) slots.emplace_back(u, v);
        std::shuffle(slots.begin(), slots.end(), rng);
        for (auto [u, v] : slots) {
            bool free_before = !contains(g, pattern).has_value();
            g.add_edge(u, v);
            bool through = embeds_through_edge(g, pattern, u, v);
            bool contained_after = contains(g, pattern).has_value();
            if (free_before) CHECK(through == contained_after);
            if (through) CHECK(contained_after);
            if (contained_after) break;  // graph no longer free, delta claim ends
        }
    }
    Graph g(3);
    CHECK_THROWS_AS(embeds_through_edge(g, pattern, 0, 1), std::invalid_argument);
}
