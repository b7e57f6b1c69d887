#ifndef CPL_PARAMS_HPP
#define CPL_PARAMS_HPP

#include <stdexcept>

namespace cpl {

// k < 2p+1 means the k-th cycle power collapses to the complete graph K_k;
// the decomposition below is not defined there.
struct CompleteGraphRegime : std::domain_error {
    explicit CompleteGraphRegime(const std::string& what) : std::domain_error(what) {}
};

// Signalled when a computation requires r != 0 (or t != s for spectral claims).
struct NotApplicable : std::domain_error {
    explicit NotApplicable(const std::string& what) : std::domain_error(what) {}
};

// Integer decomposition of a cycle-power parameter pair:
//   k = s(p+1) + r   with s >= 1, 0 <= r < p+1
//   r = m*s + t      with m >= 0, 1 <= t <= s   (only when r != 0)
struct PowerCycleParams {
    int k = 0;
    int p = 0;
    int s = 0;
    int r = 0;
    int m = 0;        // defined only when r != 0
    int t = 0;        // defined only when r != 0
    int p_prime = 0;  // p+m+1, defined only when r != 0
    int chi_predicted = 0;
    bool turan_applicable = false;     // r != 0
    bool spectral_applicable = false;  // r != 0 and t != s
};

// Throws CompleteGraphRegime when k < 2p+1, std::invalid_argument when p < 1.
PowerCycleParams decompose(int k, int p);

// Exact edge count of the Turan graph T_{n,r}.
long long turan_edge_count(long long n, int r);

// Exact edge count of K_{t-1} joined with T_{n-t+1, p'}.
// Throws NotApplicable when r = 0, std::invalid_argument when n < t-1+p'.
long long extremal_edge_count(int n, int k, int p);

}  // namespace cpl

#endif
