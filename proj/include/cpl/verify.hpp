#ifndef CPL_VERIFY_HPP
#define CPL_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cpl {

struct VerificationRow {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    void add(std::string name, bool ok, std::string detail = "");
    bool pass() const;
};

std::string report_to_json(const VerificationReport& report);
void print_report(const VerificationReport& report, std::ostream& os);

// Per (k, p) with 2p+1 <= k <= kmax, 1 <= p <= pmax: exact chromatic number
// against the predicted value, properness of the explicit colorings, and
// (when r != 0 and k <= crit_kmax) the color-t-criticality verdict.
VerificationReport verify_chromatic_grid(int kmax, int pmax, bool with_criticality = true,
                                         int crit_kmax = 14);

// For the construction K_{t-1} v T_{n-t+1,p'}: freeness, the Rayleigh bound
// (1-1/p')n - p'/(4n), quotient agreement, closed-form Perron entries, and
// balanced-beats-unbalanced comparisons.
VerificationReport verify_spectral_construction(int n, int k, int p, double tol);

// All non-increasing profiles of `total` into exactly `parts` parts >= 1.
std::vector<std::vector<int>> part_profiles(int total, int parts);

// Balanced profile (largest-first) of `total` into `parts` parts.
std::vector<int> balanced_profile(int total, int parts);

}  // namespace cpl

#endif
