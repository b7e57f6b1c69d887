#include <doctest.h>

#include "cpl/graph.hpp"
#include "cpl/params.hpp"
#include "oracles.hpp"

using namespace cpl;

namespace {

// exhaustive scan over all candidate (m, t): the decomposition must be the
// unique solution of r = m*s + t with m >= 0 and 1 <= t <= s
int count_mt_solutions(int s, int r, int m_expected, int t_expected) {
    int count = 0;
    for (int m = 0; m <= r; ++m)
        for (int t = 1; t <= s; ++t)
            if (m * s + t == r) {
                ++count;
                CHECK(m == m_expected);
                CHECK(t == t_expected);
            }
    return count;
}

}  // namespace

TEST_CASE("decompose frozen small cases") {
    auto q = decompose(7, 2);
    CHECK(q.s == 2);
    CHECK(q.r == 1);
    CHECK(q.m == 0);
    CHECK(q.t == 1);
    CHECK(q.p_prime == 3);
    CHECK(q.chi_predicted == 4);
    CHECK(q.turan_applicable);
    CHECK(q.spectral_applicable);

    q = decompose(5, 2);
    CHECK(q.s == 1);
    CHECK(q.r == 2);
    CHECK(q.m == 1);
    CHECK(q.t == 1);
    CHECK(q.p_prime == 4);
    CHECK(q.chi_predicted == 5);

    q = decompose(9, 2);
    CHECK(q.s == 3);
    CHECK(q.r == 0);
    CHECK(q.chi_predicted == 3);
    CHECK_FALSE(q.turan_applicable);
    CHECK_FALSE(q.spectral_applicable);

    // t = s boundary: turan branch applies, spectral branch does not
    q = decompose(8, 2);
    CHECK(q.s == 2);
    CHECK(q.r == 2);
    CHECK(q.m == 0);
    CHECK(q.t == 2);
    CHECK(q.turan_applicable);
    CHECK_FALSE(q.spectral_applicable);
}

TEST_CASE("decompose rejects bad parameters") {
    CHECK_THROWS_AS(decompose(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(decompose(7, -1), std::invalid_argument);
    CHECK_THROWS_AS(decompose(4, 2), CompleteGraphRegime);
    CHECK_THROWS_AS(decompose(2, 1), CompleteGraphRegime);
    CHECK_NOTHROW(decompose(5, 2));  // k = 2p+1 is the boundary, allowed
}

TEST_CASE("decomposition identity and uniqueness over the grid") {
    for (int p = 1; p <= 6; ++p) {
        for (int k = 2 * p + 1; k <= 40; ++k) {
            auto q = decompose(k, p);
            CHECK(q.s >= 1);
            CHECK(q.r >= 0);
            CHECK(q.r < p + 1);
            CHECK(k == q.s * (p + 1) + q.r);
            CHECK(q.chi_predicted >= p + 1);
            CHECK(q.turan_applicable == (q.r != 0));
            if (q.r == 0) {
                CHECK(q.chi_predicted == p + 1);
                CHECK_FALSE(q.spectral_applicable);
            } else {
                CHECK(q.m >= 0);
                CHECK(q.t >= 1);
                CHECK(q.t <= q.s);
                CHECK(q.r == q.m * q.s + q.t);
                CHECK(count_mt_solutions(q.s, q.r, q.m, q.t) == 1);
                CHECK(q.p_prime == p + q.m + 1);
                CHECK(q.chi_predicted == p + q.m + 2);
                CHECK(q.spectral_applicable == (q.t != q.s));
                // partition identity: k = t(p+m+2) + (s-t)(p+m+1)
                CHECK(k == q.t * (p + q.m + 2) + (q.s - q.t) * (p + q.m + 1));
            }
        }
    }
}

TEST_CASE("turan_edge_count matches the direct count") {
    CHECK(turan_edge_count(6, 3) == 12);
    CHECK(turan_edge_count(7, 4) == 18);
    for (int n = 0; n <= 12; ++n) CHECK(turan_edge_count(n, 1) == 0);
    for (int n = 0; n <= 30; ++n)
        for (int r = 1; r <= 6; ++r) {
            CHECK(turan_edge_count(n, r) == oracle::turan_edges(n, r));
            CHECK(turan_edge_count(n, r) == turan(n, r).edge_count());
        }
}

TEST_CASE("extremal_edge_count frozen cases and construction consistency") {
    CHECK(extremal_edge_count(10, 11, 2) == 36);
    CHECK(extremal_edge_count(8, 5, 2) == 24);
    CHECK(extremal_edge_count(9, 7, 2) == 27);
    for (int p = 1; p <= 3; ++p)
        for (int k = 2 * p + 1; k <= 14; ++k) {
            auto q = decompose(k, p);
            if (q.r == 0) {
                CHECK_THROWS_AS(extremal_edge_count(20, k, p), NotApplicable);
                continue;
            }
            for (int n : {q.t - 1 + q.p_prime, 10, 17, 25})
                CHECK(extremal_edge_count(n, k, p) ==
                      extremal_construction(n, k, p).edge_count());
        }
}

TEST_CASE("extremal_edge_count rejects degenerate n") {
    auto q = decompose(7, 2);  // t = 1, p' = 3
    CHECK_THROWS_AS(extremal_edge_count(q.t - 1 + q.p_prime - 1, 7, 2),
                    std::invalid_argument);
}
