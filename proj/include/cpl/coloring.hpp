#ifndef CPL_COLORING_HPP
#define CPL_COLORING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cpl/graph.hpp"

namespace cpl {

struct Coloring {
    std::vector<int> colors;  // vertex -> color index
    int palette = 0;
};

struct SolverCapExceeded : std::runtime_error {
    explicit SolverCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Largest order accepted by the exact chromatic solver.
constexpr int kChromaticSolverCap = 40;

bool is_proper(const Graph& g, const Coloring& c);

// Exact chromatic number: greedy clique lower bound, DSATUR upper bound,
// then a k-colorability decision loop. Throws SolverCapExceeded above the cap.
int chromatic_number(const Graph& g);

// Exact k-colorability decision (DSATUR-ordered backtracking).
bool k_colorable(const Graph& g, int k);

// Proper coloring of C_k^p with p+1 colors for the r = 0 case: vertex i
// gets color i mod (p+1). Rejects r != 0.
Coloring round_robin_coloring(int k, int p);

// Proper coloring of C_k^p with p+m+2 colors for the r != 0 case: the first
// t(p+m+2) vertices cycle through p+m+2 colors, the rest through p+m+1.
// Rejects r = 0.
Coloring optimal_coloring(int k, int p);

// The t-edge matching { v_{j(p+m+2)+(p+m)} v_{(j+1)(p+m+2)-1} : 0 <= j < t }
// whose removal drops the chromatic number of C_k^p. Rejects r = 0.
std::vector<std::pair<int, int>> critical_edges(int k, int p);

// Recoloring of optimal_coloring with p+m+1 colors, proper on C_k^p minus
// critical_edges(k, p). Rejects r = 0.
Coloring reduced_coloring(int k, int p);

struct CriticalityReport {
    int target = 0;
    std::vector<std::pair<int, int>> dropping_matching;  // found matching, if any
    bool edge_removal_drops_chi = false;
    std::optional<std::vector<int>> failing_subset;  // (target-1)-subset that drops chi
    bool verdict = false;
    bool budget_exceeded = false;
    long long subsets_checked = 0;
    long long matchings_checked = 0;
};

// Verdict true iff removing some matching of `target` edges drops chi(g) and
// deleting any target-1 vertices does not. `budget` caps the total number of
// colorability solves; exceeding it sets budget_exceeded on the partial report.
CriticalityReport is_color_k_critical(const Graph& g, int target,
                                      long long budget = 2'000'000);

}  // namespace cpl

#endif
