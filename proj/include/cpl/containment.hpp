#ifndef CPL_CONTAINMENT_HPP
#define CPL_CONTAINMENT_HPP

#include <optional>
#include <vector>

#include "cpl/graph.hpp"

namespace cpl {

// Injective map pattern vertex -> host vertex carrying every pattern edge to
// a host edge (subgraph, not induced).
using Embedding = std::vector<int>;

// Backtracking search for a subgraph embedding of `pattern` in `host`.
// Absence is a value, not an error.
std::optional<Embedding> contains(const Graph& host, const Graph& pattern);

// True iff `emb` satisfies the Embedding invariants for (host, pattern).
bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& emb);

// True iff some embedding maps a pattern edge onto the host edge {u, v}.
// For a host known to be pattern-free before {u, v} was added, this decides
// whether the addition created the pattern.
bool embeds_through_edge(const Graph& host, const Graph& pattern, int u, int v);

// True iff host has no subgraph isomorphic to C_k^p. Patterns are memoized
// per (k, p); the cache is guarded for concurrent use.
bool is_free(const Graph& host, int k, int p);

}  // namespace cpl

#endif
