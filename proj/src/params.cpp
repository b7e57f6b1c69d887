#include "cpl/params.hpp"

#include <string>

namespace cpl {

PowerCycleParams decompose(int k, int p) {
    if (p < 1) throw std::invalid_argument("power p must be >= 1");
    if (k < 2 * p + 1)
        throw CompleteGraphRegime("k=" + std::to_string(k) + " < 2p+1=" +
                                  std::to_string(2 * p + 1) +
                                  ": cycle power is the complete graph K_k");
    PowerCycleParams q;
    q.k = k;
    q.p = p;
    q.s = k / (p + 1);
    q.r = k % (p + 1);
    if (q.r != 0) {
        // unique m >= 0, 1 <= t <= s with r = m*s + t; lands t = s when s | r
        q.m = (q.r - 1) / q.s;
        q.t = q.r - q.m * q.s;
        q.p_prime = p + q.m + 1;
        q.chi_predicted = p + q.m + 2;
        q.turan_applicable = true;
        q.spectral_applicable = (q.t != q.s);
    } else {
        q.chi_predicted = p + 1;
    }
    return q;
}

long long turan_edge_count(long long n, int r) {
    if (r < 1) throw std::invalid_argument("part count r must be >= 1");
    long long q = n / r;
    long long rem = n % r;
    auto c2 = [](long long x) { return x * (x - 1) / 2; };
    return c2(n) - rem * c2(q + 1) - (r - rem) * c2(q);
}

long long extremal_edge_count(int n, int k, int p) {
    PowerCycleParams q = decompose(k, p);
    if (q.r == 0)
        throw NotApplicable("r = 0: no extremal construction for these parameters");
    if (n < q.t - 1 + q.p_prime)
        throw std::invalid_argument("n too small: construction degenerate");
    long long t1 = q.t - 1;
    return t1 * (t1 - 1) / 2 + t1 * (n - t1) + turan_edge_count(n - t1, q.p_prime);
}

}  // namespace cpl
