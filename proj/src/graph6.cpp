#include "cpl/graph.hpp"

namespace cpl {

namespace {

void append_bits(std::string& out, std::vector<bool>& bits) {
    while (bits.size() % 6 != 0) bits.push_back(false);
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = (v << 1) | (bits[i + b] ? 1 : 0);
        out.push_back(static_cast<char>(v + 63));
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > 258047) throw std::invalid_argument("graph too large for short graph6 header");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    // upper triangle, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

Graph graph6_decode(const std::string& text) {
    size_t pos = 0;
    auto need = [&](size_t at) -> int {
        if (at >= text.size()) throw Graph6Error("truncated graph6 string", at);
        unsigned char c = text[at];
        if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 alphabet", at);
        return c - 63;
    };
    long long n;
    int first = need(0);
    if (first == 63) {  // '~' header: 18-bit order
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int v = need(i);
            if (v == 63) throw Graph6Error("long-form headers not supported", i);
            n = (n << 6) | v;
        }
        pos = 4;
    } else {
        n = first;
        pos = 1;
    }
    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    long long expect_bytes = (nbits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) != expect_bytes)
        throw Graph6Error("wrong payload length for stated order", text.size());
    long long bit = 0;
    int i = 0, j = 1;
    for (long long byte = 0; byte < expect_bytes; ++byte) {
        int v = need(pos + byte);
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= nbits) {
                if ((v >> b) & 1) throw Graph6Error("nonzero padding bits", pos + byte);
                continue;
            }
            if ((v >> b) & 1) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

}  // namespace cpl
