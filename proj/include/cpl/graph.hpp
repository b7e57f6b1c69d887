#ifndef CPL_GRAPH_HPP
#define CPL_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpl {

// Returned by distance() for unreachable pairs.
constexpr int kUnreachable = -1;

// Simple undirected graph with bit-packed adjacency rows.
// Immutable by convention once built; all operations on it are pure.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("negative order");
    }

    int order() const { return n_; }
    int words() const { return words_; }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("self-loop");
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
        bits_[static_cast<size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    }

    void remove_edge(int u, int v) {
        check(u);
        check(v);
        bits_[static_cast<size_t>(u) * words_ + v / 64] &= ~(1ull << (v % 64));
        bits_[static_cast<size_t>(v) * words_ + u / 64] &= ~(1ull << (u % 64));
    }

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }

    int degree(int u) const;
    long long edge_count() const;
    std::vector<int> neighbors(int u) const;
    std::vector<std::pair<int, int>> edges() const;

    template <class F>
    void for_each_neighbor(int u, F&& f) const {
        const std::uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const Graph&) const = default;

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Ordered list of pairwise-disjoint nonempty vertex sets covering {0,...,n-1}.
struct VertexPartition {
    std::vector<std::vector<int>> blocks;

    // Throws std::invalid_argument if blocks are empty, overlap, or miss vertices.
    void validate(int n) const;
    static VertexPartition single_block(int n);
};

// --- graph families ---

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle(int n);                                        // n >= 3
Graph power(const Graph& g, int p);                        // p >= 1
Graph cycle_power(int k, int p);                           // power(cycle(k), p)
Graph join(const Graph& g, const Graph& h);
Graph turan(int n, int r);                                 // r >= 1, parts largest-first
Graph complete_multipartite(const std::vector<int>& parts);
Graph extremal_construction(int n, int k, int p);          // K_{t-1} v T_{n-t+1,p'}

// BFS shortest-path length; kUnreachable for disconnected pairs.
int distance(const Graph& g, int u, int v);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

// --- interchange ---

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    size_t byte_offset;
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace cpl

#endif
