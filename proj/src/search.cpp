#include "cpl/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "cpl/containment.hpp"
#include "cpl/params.hpp"
#include "cpl/spectral.hpp"

namespace cpl {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

}  // namespace

std::string canonical_graph6(const Graph& g) {
    int n = g.order();
    if (n > kCanonicalCap)
        throw CapExceeded("canonical form capped at " + std::to_string(kCanonicalCap) +
                          " vertices");
    auto pairs = all_pairs(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> best, cur;
    do {
        cur.clear();
        for (auto [u, v] : pairs) cur.push_back(g.has_edge(perm[u], perm[v]) ? 1 : 0);
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Graph canon(n);
    for (size_t i = 0; i < pairs.size(); ++i)
        if (best[i]) canon.add_edge(pairs[i].first, pairs[i].second);
    return graph6_encode(canon);
}

namespace {

// Shared state for the include/exclude DFS over edge slots.
struct ExSweep {
    int n;
    const Graph& pattern;
    std::vector<std::pair<int, int>> slots;
    long long best = -1;
    std::set<std::string> witnesses;
    Graph g;

    ExSweep(int n_, const Graph& pat) : n(n_), pattern(pat), slots(all_pairs(n_)), g(n_) {}

    void dfs(size_t i, long long included) {
        long long remaining = static_cast<long long>(slots.size()) - static_cast<long long>(i);
        if (included + remaining < best) return;
        if (i == slots.size()) {
            if (included > best) {
                best = included;
                witnesses.clear();
            }
            if (included == best) witnesses.insert(canonical_graph6(g));
            return;
        }
        auto [u, v] = slots[i];
        // g is pattern-free here, so only embeddings through the new edge matter
        g.add_edge(u, v);
        if (!embeds_through_edge(g, pattern, u, v)) dfs(i + 1, included + 1);
        g.remove_edge(u, v);
        dfs(i + 1, included);
    }
};

// candidate free graphs used to seed the lower bound before sweeping
long long seed_lower_bound(int n, int k, int p, const Graph& pattern) {
    long long best = 0;
    auto consider = [&](const Graph& g) {
        if (!contains(g, pattern)) best = std::max(best, g.edge_count());
    };
    for (int r = 1; r < n; ++r) consider(turan(n, r));
    try {
        consider(extremal_construction(n, k, p));
    } catch (const std::exception&) {
    }
    return best;
}

}  // namespace

SearchRecord ex_bruteforce(int n, int k, int p) {
    if (n > kExhaustiveExCap)
        throw CapExceeded("exhaustive ex sweep capped at n = " +
                          std::to_string(kExhaustiveExCap) + "; use heuristic mode");
    auto start = Clock::now();
    SearchRecord rec;
    rec.n = n;
    rec.k = k;
    rec.p = p;
    rec.mode = "ex";
    rec.exhaustive = true;
    rec.method = "labeled edge-slot sweep with bound and containment pruning";
    if (n < k) {  // pattern cannot fit
        rec.value = static_cast<double>(n) * (n - 1) / 2;
        rec.witnesses.push_back(canonical_graph6(complete_graph(n)));
        rec.wall_time = elapsed_seconds(start);
        return rec;
    }
    Graph pattern = cycle_power(k, p);
    ExSweep sweep(n, pattern);
    sweep.best = seed_lower_bound(n, k, p, pattern);
    sweep.dfs(0, 0);
    rec.value = static_cast<double>(sweep.best);
    rec.witnesses.assign(sweep.witnesses.begin(), sweep.witnesses.end());
    rec.wall_time = elapsed_seconds(start);
    return rec;
}

namespace {

struct SpexSweep {
    int n;
    const Graph& pattern;
    double tol;
    std::vector<std::pair<int, int>> slots;
    double best = -1.0;
    std::set<std::string> witnesses;
    Graph g;
    std::vector<size_t> voluntary;  // slots excluded although addable at the time

    SpexSweep(int n_, const Graph& pat, double tol_)
        : n(n_), pattern(pat), tol(tol_), slots(all_pairs(n_)), g(n_) {}

    void dfs(size_t i, long long included) {
        // lambda^2 <= trace(A^2) = 2e caps what this branch can still reach
        long long max_edges = included + (static_cast<long long>(slots.size()) - i);
        if (std::sqrt(2.0 * max_edges) < best - 1e-9) return;
        if (i == slots.size()) {
            // only edge-maximal graphs matter; forced exclusions stay blocked,
            // voluntary ones must be re-checked against the final graph
            for (size_t s : voluntary) {
                auto [u, v] = slots[s];
                g.add_edge(u, v);
                bool addable = !embeds_through_edge(g, pattern, u, v);
                g.remove_edge(u, v);
                if (addable) return;
            }
            double lambda = spectral_radius(g, tol).lambda;
            if (lambda > best + 1e-9) {
                best = lambda;
                witnesses.clear();
            }
            if (std::fabs(lambda - best) <= 1e-9) witnesses.insert(canonical_graph6(g));
            return;
        }
        auto [u, v] = slots[i];
        g.add_edge(u, v);
        bool addable = !embeds_through_edge(g, pattern, u, v);
        if (addable) dfs(i + 1, included + 1);
        g.remove_edge(u, v);
        if (addable) voluntary.push_back(i);
        dfs(i + 1, included);
        if (addable) voluntary.pop_back();
    }
};

// lambda of the best known free graph; the sweep can only improve on it
double seed_spex_bound(int n, int k, int p, const Graph& pattern) {
    double best = 0.0;
    auto consider = [&](const Graph& g) {
        if (!contains(g, pattern)) best = std::max(best, spectral_radius(g).lambda);
    };
    for (int r = 1; r < n; ++r) consider(turan(n, r));
    try {
        consider(extremal_construction(n, k, p));
    } catch (const std::exception&) {
    }
    return best;
}

}  // namespace

SearchRecord spex_bruteforce(int n, int k, int p, double tol) {
    if (n > kExhaustiveSpexCap)
        throw CapExceeded("exhaustive spex sweep capped at n = " +
                          std::to_string(kExhaustiveSpexCap) + "; use heuristic mode");
    auto start = Clock::now();
    SearchRecord rec;
    rec.n = n;
    rec.k = k;
    rec.p = p;
    rec.mode = "spex";
    rec.exhaustive = true;
    rec.method = "edge-maximal sweep with power-iteration evaluation";
    if (n < k) {
        rec.value = n - 1.0;
        rec.witnesses.push_back(canonical_graph6(complete_graph(n)));
        rec.wall_time = elapsed_seconds(start);
        return rec;
    }
    Graph pattern = cycle_power(k, p);
    SpexSweep sweep(n, pattern, tol);
    sweep.best = seed_spex_bound(n, k, p, pattern);
    sweep.dfs(0, 0);
    rec.value = sweep.best;
    rec.witnesses.assign(sweep.witnesses.begin(), sweep.witnesses.end());
    rec.wall_time = elapsed_seconds(start);
    return rec;
}

namespace {

// remove edges of found embeddings until the graph is pattern-free, keeping
// `keep` untouched; highest degree-sum edge goes first
void repair_freeness(Graph& g, const Graph& pattern, std::pair<int, int> keep) {
    while (auto emb = contains(g, pattern)) {
        std::pair<int, int> worst{-1, -1};
        int worst_score = -1;
        for (auto [pu, pv] : pattern.edges()) {
            int u = (*emb)[pu], v = (*emb)[pv];
            if (std::minmax(u, v) == std::minmax(keep.first, keep.second)) continue;
            int score = g.degree(u) + g.degree(v);
            if (score > worst_score ||
                (score == worst_score && std::minmax(u, v) < std::minmax(worst.first, worst.second))) {
                worst_score = score;
                worst = {u, v};
            }
        }
        if (worst.first < 0) {  // embedding uses only the kept edge, give it up
            g.remove_edge(keep.first, keep.second);
            return;
        }
        g.remove_edge(worst.first, worst.second);
    }
}

Graph random_maximal_free(int n, const Graph& pattern, std::mt19937& rng) {
    Graph g(n);
    auto slots = all_pairs(n);
    std::shuffle(slots.begin(), slots.end(), rng);
    for (auto [u, v] : slots) {
        g.add_edge(u, v);
        if (embeds_through_edge(g, pattern, u, v)) g.remove_edge(u, v);
    }
    return g;
}

}  // namespace

SearchRecord hillclimb_spex(int n, int k, int p, int seed_count, long long step_budget,
                            unsigned seed) {
    if (n > kHeuristicCap)
        throw CapExceeded("heuristic search capped at n = " + std::to_string(kHeuristicCap));
    auto start = Clock::now();
    Graph pattern = cycle_power(k, p);
    std::mt19937 rng(seed);

    std::vector<Graph> starts;
    try {
        starts.push_back(extremal_construction(n, k, p));
    } catch (const std::exception&) {
    }
    for (int i = 0; i < seed_count; ++i) starts.push_back(random_maximal_free(n, pattern, rng));

    double best_lambda = -1.0;
    Graph best_graph(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (Graph g : starts) {
        double cur = spectral_radius(g).lambda;
        if (cur > best_lambda) {
            best_lambda = cur;
            best_graph = g;
        }
        for (long long step = 0; step < step_budget; ++step) {
            int u = pick(rng), v = pick(rng);
            if (u == v) continue;
            Graph trial = g;
            if (trial.has_edge(u, v)) {
                trial.remove_edge(u, v);
            } else {
                trial.add_edge(u, v);
                repair_freeness(trial, pattern, {u, v});
            }
            double lambda = spectral_radius(trial).lambda;
            if (lambda > cur + 1e-12) {
                g = std::move(trial);
                cur = lambda;
                if (cur > best_lambda) {
                    best_lambda = cur;
                    best_graph = g;
                }
            }
        }
    }

    SearchRecord rec;
    rec.n = n;
    rec.k = k;
    rec.p = p;
    rec.mode = "spex";
    rec.value = best_lambda;
    rec.witnesses.push_back(graph6_encode(best_graph));
    rec.exhaustive = false;
    rec.method = "hillclimb(seed=" + std::to_string(seed) +
                 ",starts=" + std::to_string(starts.size()) +
                 ",budget=" + std::to_string(step_budget) + ")";
    rec.wall_time = elapsed_seconds(start);
    return rec;
}

std::string record_to_json(const SearchRecord& rec) {
    nlohmann::json j;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["p"] = rec.p;
    j["mode"] = rec.mode;
    j["value"] = rec.value;
    j["witnesses"] = rec.witnesses;
    j["exhaustive"] = rec.exhaustive;
    j["method"] = rec.method;
    j["wallTime"] = rec.wall_time;
    return j.dump();
}

SearchRecord record_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    SearchRecord rec;
    rec.n = j.at("n").get<int>();
    rec.k = j.at("k").get<int>();
    rec.p = j.at("p").get<int>();
    rec.mode = j.at("mode").get<std::string>();
    rec.value = j.at("value").get<double>();
    rec.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    rec.exhaustive = j.at("exhaustive").get<bool>();
    rec.method = j.at("method").get<std::string>();
    rec.wall_time = j.at("wallTime").get<double>();
    return rec;
}

namespace {

bool validate_record(const SearchRecord& rec) {
    if (rec.mode != "ex" && rec.mode != "spex") return false;
    for (const auto& w : rec.witnesses) {
        Graph g = graph6_decode(w);
        if (g.order() != rec.n) return false;
        if (!is_free(g, rec.k, rec.p)) return false;
        if (rec.mode == "ex") {
            if (g.edge_count() != static_cast<long long>(rec.value)) return false;
        } else {
            if (std::fabs(spectral_radius(g).lambda - rec.value) > 1e-6) return false;
        }
    }
    return !rec.witnesses.empty();
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

void ResultCache::store(const SearchRecord& rec) {
    std::ofstream out(dir_ / "records.jsonl", std::ios::app);
    if (!out) throw std::runtime_error("cache directory not writable: " + dir_.string());
    out << record_to_json(rec) << "\n";
}

std::optional<SearchRecord> ResultCache::load(int n, int k, int p, const std::string& mode) {
    std::ifstream in(dir_ / "records.jsonl");
    if (!in) return std::nullopt;
    std::optional<SearchRecord> found;
    std::vector<std::string> keep, quarantine;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            SearchRecord rec = record_from_json(line);
            if (rec.n == n && rec.k == k && rec.p == p && rec.mode == mode) {
                if (!validate_record(rec)) throw std::runtime_error("witness validation failed");
                found = rec;  // latest record wins
            }
            keep.push_back(line);
        } catch (const std::exception& e) {
            std::cerr << "cache: quarantined corrupt record: " << e.what() << "\n";
            quarantine.push_back(line);
        }
    }
    in.close();
    if (!quarantine.empty()) {
        std::ofstream q(dir_ / "quarantine.jsonl", std::ios::app);
        for (const auto& l : quarantine) q << l << "\n";
        std::ofstream rewrite(dir_ / "records.jsonl", std::ios::trunc);
        for (const auto& l : keep) rewrite << l << "\n";
    }
    return found;
}

}  // namespace cpl
