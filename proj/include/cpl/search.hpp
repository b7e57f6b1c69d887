#ifndef CPL_SEARCH_HPP
#define CPL_SEARCH_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cpl/graph.hpp"

namespace cpl {

constexpr int kExhaustiveExCap = 8;
constexpr int kExhaustiveSpexCap = 7;
constexpr int kHeuristicCap = 60;
constexpr int kCanonicalCap = 8;

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SearchRecord {
    int n = 0, k = 0, p = 0;
    std::string mode;  // "ex" or "spex"
    double value = 0.0;
    std::vector<std::string> witnesses;  // graph6, canonical when exhaustive
    bool exhaustive = false;
    std::string method;
    double wall_time = 0.0;  // seconds
};

// Lexicographically minimal adjacency string over all vertex permutations,
// returned as graph6. Capped at kCanonicalCap vertices.
std::string canonical_graph6(const Graph& g);

// Exhaustive maximum edge count over n-vertex C_k^p-free graphs, with all
// extremal witnesses up to isomorphism. DFS over edge slots with an
// edge-budget bound and monotone containment pruning.
SearchRecord ex_bruteforce(int n, int k, int p);

// Exhaustive maximum spectral radius; the sweep visits edge-maximal free
// graphs only (edge monotonicity of the spectral radius).
SearchRecord spex_bruteforce(int n, int k, int p, double tol = 1e-12);

// Local search: starts from the extremal construction (when defined) and
// from random edge-maximal free graphs; moves are single-edge toggles with
// greedy freeness repair. Never claims optimality.
SearchRecord hillclimb_spex(int n, int k, int p, int seed_count,
                            long long step_budget, unsigned seed);

// JSON-lines cache keyed by (n, k, p, mode). Records are re-validated on
// load: every witness must decode, be C_k^p-free, and attain the value.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);
    void store(const SearchRecord& rec);
    std::optional<SearchRecord> load(int n, int k, int p, const std::string& mode);
    const std::filesystem::path& directory() const { return dir_; }

private:
    std::filesystem::path dir_;
};

std::string record_to_json(const SearchRecord& rec);
SearchRecord record_from_json(const std::string& line);  // throws on malformed input

}  // namespace cpl

#endif
