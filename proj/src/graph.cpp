#include "cpl/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>

#include "cpl/params.hpp"

namespace cpl {

int Graph::degree(int u) const {
    check(u);
    const std::uint64_t* r = row(u);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int u = 0; u < n_; ++u) total += degree(u);
    return total / 2;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    for_each_neighbor(u, [&](int v) { out.push_back(v); });
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

void VertexPartition::validate(int n) const {
    std::vector<char> seen(n, 0);
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("partition has an empty block");
        for (int v : block) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
            if (seen[v]) throw std::invalid_argument("partition blocks overlap");
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw std::invalid_argument("partition does not cover all vertices");
}

VertexPartition VertexPartition::single_block(int n) {
    VertexPartition p;
    p.blocks.emplace_back();
    for (int v = 0; v < n; ++v) p.blocks[0].push_back(v);
    return p;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph power(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("power needs p >= 1");
    int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        // single BFS gives all distances from u
        std::vector<int> dist(n, kUnreachable);
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (dist[x] >= p) continue;
            g.for_each_neighbor(x, [&](int y) {
                if (dist[y] == kUnreachable) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            });
        }
        for (int v = u + 1; v < n; ++v)
            if (dist[v] != kUnreachable && dist[v] <= p) out.add_edge(u, v);
    }
    return out;
}

Graph cycle_power(int k, int p) { return power(cycle(k), p); }

Graph join(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    Graph out(ng + nh);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
    return out;
}

Graph turan(int n, int r) {
    if (r < 1) throw std::invalid_argument("turan needs r >= 1");
    std::vector<int> parts;
    int q = n / r, rem = n % r;
    for (int i = 0; i < rem; ++i) parts.push_back(q + 1);
    for (int i = rem; i < r; ++i) parts.push_back(q);
    // parts of size 0 happen when n < r; drop them
    std::erase(parts, 0);
    if (parts.empty()) return Graph(0);
    return complete_multipartite(parts);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty parts list");
    int n = 0;
    for (int s : parts) {
        if (s < 1) throw std::invalid_argument("part size must be >= 1");
        n += s;
    }
    Graph g(n);
    std::vector<int> part_of(n);
    int idx = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of[idx++] = static_cast<int>(i);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph extremal_construction(int n, int k, int p) {
    PowerCycleParams q = decompose(k, p);
    if (q.r == 0) throw NotApplicable("r = 0: extremal construction not defined");
    if (n < q.t - 1 + q.p_prime)
        throw std::invalid_argument("n too small: construction degenerate");
    return join(complete_graph(q.t - 1), turan(n - q.t + 1, q.p_prime));
}

int distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw std::out_of_range("vertex index out of range");
    if (u == v) return 0;
    std::vector<int> dist(g.order(), kUnreachable);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        int found = kUnreachable;
        g.for_each_neighbor(x, [&](int y) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                if (y == v) found = dist[y];
                q.push(y);
            }
        });
        if (found != kUnreachable) return found;
    }
    return kUnreachable;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            g.for_each_neighbor(x, [&](int y) {
                if (!seen[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                    q.push(y);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) os << "  v" << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace cpl
