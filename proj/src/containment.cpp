#include "cpl/containment.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace cpl {

namespace {

struct Matcher {
    const Graph& host;
    const Graph& pattern;
    int hn, pn, words;
    std::vector<int> order;        // pattern vertices, search order
    std::vector<int> map;          // pattern vertex -> host vertex or -1
    std::vector<char> used;        // host vertex used
    std::vector<std::uint64_t> scratch;

    Matcher(const Graph& h, const Graph& p)
        : host(h), pattern(p), hn(h.order()), pn(p.order()), words(h.words()),
          map(pn, -1), used(hn, 0), scratch(words) {
        order.resize(pn);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return pattern.degree(a) > pattern.degree(b);
        });
    }

    bool assign(int pv, int hv) {
        if (used[hv] || host.degree(hv) < pattern.degree(pv)) return false;
        map[pv] = hv;
        used[hv] = 1;
        // preassigned vertices go first in the search order
        auto it = std::find(order.begin(), order.end(), pv);
        std::rotate(order.begin(), it, it + 1);
        return true;
    }

    // Host vertices u, v are interchangeable when swapping them is an
    // automorphism: equal neighborhoods outside {u, v} and symmetric inside.
    bool twins(int u, int v) const {
        const std::uint64_t* ru = host.row(u);
        const std::uint64_t* rv = host.row(v);
        for (int w = 0; w < words; ++w) {
            std::uint64_t mask = ~0ull;
            if (u / 64 == w) mask &= ~(1ull << (u % 64));
            if (v / 64 == w) mask &= ~(1ull << (v % 64));
            if ((ru[w] & mask) != (rv[w] & mask)) return false;
        }
        return true;
    }

    bool solve(int depth) {
        if (depth == pn) return true;
        int pv = order[depth];
        if (map[pv] != -1) {
            // preassigned; verify adjacency to other assigned neighbors
            for (int pu = 0; pu < pn; ++pu)
                if (map[pu] != -1 && pattern.has_edge(pu, pv) &&
                    !host.has_edge(map[pu], map[pv]))
                    return false;
            return solve(depth + 1);
        }
        int pdeg = pattern.degree(pv);

        // candidates: common host neighbors of already-mapped pattern neighbors
        for (int w = 0; w < words; ++w) scratch[w] = ~0ull;
        for (int pu = 0; pu < pn; ++pu) {
            if (map[pu] == -1 || !pattern.has_edge(pu, pv)) continue;
            const std::uint64_t* r = host.row(map[pu]);
            for (int w = 0; w < words; ++w) scratch[w] &= r[w];
        }
        std::vector<std::uint64_t> cand(scratch);
        if (hn % 64) cand[words - 1] &= (1ull << (hn % 64)) - 1;

        std::vector<int> tried;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int hv = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (used[hv] || host.degree(hv) < pdeg) continue;
                // an interchangeable vertex already failed here
                bool skip = false;
                for (int t : tried)
                    if (!used[t] && twins(t, hv)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
                map[pv] = hv;
                used[hv] = 1;
                if (solve(depth + 1)) return true;
                used[hv] = 0;
                map[pv] = -1;
                tried.push_back(hv);
            }
        }
        return false;
    }
};

// necessary condition: enough high-degree host vertices for each degree level
bool degree_sequence_admits(const Graph& host, const Graph& pattern) {
    std::vector<int> hd(host.order()), pd(pattern.order());
    for (int v = 0; v < host.order(); ++v) hd[v] = host.degree(v);
    for (int v = 0; v < pattern.order(); ++v) pd[v] = pattern.degree(v);
    std::sort(hd.rbegin(), hd.rend());
    std::sort(pd.rbegin(), pd.rend());
    for (size_t i = 0; i < pd.size(); ++i)
        if (hd[i] < pd[i]) return false;
    return true;
}

}  // namespace

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& emb) {
    if (static_cast<int>(emb.size()) != pattern.order()) return false;
    std::vector<char> seen(host.order(), 0);
    for (int hv : emb) {
        if (hv < 0 || hv >= host.order() || seen[hv]) return false;
        seen[hv] = 1;
    }
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(emb[u], emb[v])) return false;
    return true;
}

bool embeds_through_edge(const Graph& host, const Graph& pattern, int u, int v) {
    if (!host.has_edge(u, v)) throw std::invalid_argument("{u,v} is not a host edge");
    if (pattern.order() > host.order()) return false;
    for (auto [pa, pb] : pattern.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            int hu = flip ? v : u, hv = flip ? u : v;
            Matcher m(host, pattern);
            if (!m.assign(pa, hu)) continue;
            if (!m.assign(pb, hv)) continue;
            if (m.solve(0)) return true;
        }
    }
    return false;
}

std::optional<Embedding> contains(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    if (pattern.order() == 0) return Embedding{};
    if (pattern.edge_count() > host.edge_count()) return std::nullopt;
    if (!degree_sequence_admits(host, pattern)) return std::nullopt;
    Matcher m(host, pattern);
    if (!m.solve(0)) return std::nullopt;
    return m.map;
}

bool is_free(const Graph& host, int k, int p) {
    if (k < 3) throw std::invalid_argument("cycle power needs k >= 3");
    if (host.order() < k) return true;
    static std::map<std::pair<int, int>, Graph> cache;
    static std::mutex cache_mutex;
    Graph pattern;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({k, p});
        if (it == cache.end())
            it = cache.emplace(std::pair{k, p}, cycle_power(k, p)).first;
        pattern = it->second;
    }
    return !contains(host, pattern).has_value();
}

}  // namespace cpl
