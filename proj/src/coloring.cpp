#include "cpl/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "cpl/params.hpp"

namespace cpl {

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order())
        throw std::invalid_argument("coloring not total on V(g)");
    for (int v : c.colors)
        if (v < 0 || v >= c.palette) return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

namespace {

// DSATUR-ordered backtracking for the k-colorability decision.
struct KColorSolver {
    const Graph& g;
    int n;
    int k;
    std::vector<int> color;
    std::vector<std::vector<int>> adj;

    KColorSolver(const Graph& graph, int kk)
        : g(graph), n(graph.order()), k(kk), color(n, -1), adj(n) {
        for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    }

    bool solve(int colored, int max_used) {
        if (colored == n) return true;
        // most saturated uncolored vertex, ties by degree then lowest index
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            std::uint64_t mask = 0;
            for (int u : adj[v])
                if (color[u] != -1) mask |= 1ull << color[u];
            int sat = __builtin_popcountll(mask);
            int deg = static_cast<int>(adj[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        std::uint64_t forbidden = 0;
        for (int u : adj[best])
            if (color[u] != -1) forbidden |= 1ull << color[u];
        // trying one fresh color is enough; colors are interchangeable
        int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if ((forbidden >> c) & 1) continue;
            color[best] = c;
            if (solve(colored + 1, std::max(max_used, c + 1))) return true;
            color[best] = -1;
        }
        return false;
    }
};

int greedy_clique_bound(const Graph& g) {
    int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int best = 0;
    for (int start : order) {
        std::vector<int> clique{start};
        for (int v : order) {
            if (v == start) continue;
            bool ok = true;
            for (int u : clique)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int dsatur_greedy_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<std::uint64_t> sat(n, 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            int s = __builtin_popcountll(sat[v]);
            int d = g.degree(v);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best = v;
                best_sat = s;
                best_deg = d;
            }
        }
        int c = 0;
        while ((sat[best] >> c) & 1) ++c;
        color[best] = c;
        used = std::max(used, c + 1);
        g.for_each_neighbor(best, [&](int u) { sat[u] |= 1ull << c; });
    }
    return used;
}

}  // namespace

bool k_colorable(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("negative palette");
    if (g.order() == 0) return true;
    if (k == 0) return false;
    if (k >= 64) throw std::invalid_argument("palette too large for solver bitmasks");
    KColorSolver solver(g, k);
    return solver.solve(0, 0);
}

int chromatic_number(const Graph& g) {
    int n = g.order();
    if (n > kChromaticSolverCap)
        throw SolverCapExceeded("exact chromatic solver capped at " +
                                std::to_string(kChromaticSolverCap) + " vertices");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    int lb = greedy_clique_bound(g);
    int ub = dsatur_greedy_colors(g);
    for (int k = lb; k < ub; ++k)
        if (k_colorable(g, k)) return k;
    return ub;
}

Coloring round_robin_coloring(int k, int p) {
    PowerCycleParams q = decompose(k, p);
    if (q.r != 0) throw NotApplicable("r != 0: round-robin coloring needs r = 0");
    Coloring c;
    c.palette = p + 1;
    c.colors.resize(k);
    for (int i = 0; i < k; ++i) c.colors[i] = i % (p + 1);
    return c;
}

Coloring optimal_coloring(int k, int p) {
    PowerCycleParams q = decompose(k, p);
    if (q.r == 0) throw NotApplicable("r = 0: use round_robin_coloring");
    int block = q.p + q.m + 2;  // chi colors on the first t blocks
    int split = q.t * block;
    Coloring c;
    c.palette = block;
    c.colors.resize(k);
    for (int i = 0; i < k; ++i)
        c.colors[i] = (i < split) ? i % block : (i - split) % (block - 1);
    return c;
}

std::vector<std::pair<int, int>> critical_edges(int k, int p) {
    PowerCycleParams q = decompose(k, p);
    if (q.r == 0) throw NotApplicable("r = 0: no critical edge set");
    int block = q.p + q.m + 2;
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < q.t; ++j)
        out.emplace_back(j * block + (q.p + q.m), (j + 1) * block - 1);
    return out;
}

Coloring reduced_coloring(int k, int p) {
    PowerCycleParams q = decompose(k, p);
    if (q.r == 0) throw NotApplicable("r = 0: no reduced coloring");
    Coloring c = optimal_coloring(k, p);
    int block = q.p + q.m + 2;
    int split = q.t * block;
    for (int i = 0; i < split; ++i)
        if (i % block == block - 1) c.colors[i] = q.p + q.m;
    c.palette = block - 1;
    return c;
}

namespace {

struct Budget {
    long long remaining;
    bool spend() { return --remaining >= 0; }
};

Graph without_edges(const Graph& g, const std::vector<std::pair<int, int>>& del) {
    Graph h = g;
    for (auto [u, v] : del) h.remove_edge(u, v);
    return h;
}

Graph without_vertices(const Graph& g, const std::vector<int>& del) {
    std::vector<char> drop(g.order(), 0);
    for (int v : del) drop[v] = 1;
    std::vector<int> remap(g.order(), -1);
    int idx = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!drop[v]) remap[v] = idx++;
    Graph h(idx);
    for (auto [u, v] : g.edges())
        if (remap[u] != -1 && remap[v] != -1) h.add_edge(remap[u], remap[v]);
    return h;
}

// DFS over matchings of size `want`, testing whether the removal admits a
// (chi-1)-coloring. Returns true when one is found.
bool find_dropping_matching(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                            size_t from, std::vector<std::pair<int, int>>& picked,
                            std::vector<char>& used, int want, int chi, Budget& budget,
                            CriticalityReport& report) {
    if (static_cast<int>(picked.size()) == want) {
        ++report.matchings_checked;
        if (!budget.spend()) return false;
        if (k_colorable(without_edges(g, picked), chi - 1)) {
            report.dropping_matching = picked;
            return true;
        }
        return false;
    }
    for (size_t i = from; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        picked.push_back(edges[i]);
        bool found = find_dropping_matching(g, edges, i + 1, picked, used, want, chi,
                                            budget, report);
        picked.pop_back();
        used[u] = used[v] = 0;
        if (found || budget.remaining < 0) return found;
    }
    return false;
}

}  // namespace

CriticalityReport is_color_k_critical(const Graph& g, int target, long long budget_cap) {
    if (target < 1) throw std::invalid_argument("criticality target must be >= 1");
    CriticalityReport report;
    report.target = target;
    int chi = chromatic_number(g);
    Budget budget{budget_cap};

    auto edges = g.edges();
    std::vector<std::pair<int, int>> picked;
    std::vector<char> used(g.order(), 0);
    report.edge_removal_drops_chi =
        find_dropping_matching(g, edges, 0, picked, used, target, chi, budget, report);
    if (budget.remaining < 0) {
        report.budget_exceeded = true;
        return report;
    }

    // every (target-1)-subset deletion must keep chi
    bool vertex_side = true;
    int del = target - 1;
    if (del > 0 && del <= g.order()) {
        std::vector<int> subset(del);
        std::vector<int> idx(del);
        for (int i = 0; i < del; ++i) idx[i] = i;
        while (true) {
            for (int i = 0; i < del; ++i) subset[i] = idx[i];
            ++report.subsets_checked;
            if (!budget.spend()) {
                report.budget_exceeded = true;
                return report;
            }
            if (k_colorable(without_vertices(g, subset), chi - 1)) {
                report.failing_subset = subset;
                vertex_side = false;
                break;
            }
            int i = del - 1;
            while (i >= 0 && idx[i] == g.order() - del + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < del; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    report.verdict = report.edge_removal_drops_chi && vertex_side;
    return report;
}

}  // namespace cpl
