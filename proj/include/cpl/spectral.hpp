#ifndef CPL_SPECTRAL_HPP
#define CPL_SPECTRAL_HPP

#include <vector>

#include "cpl/graph.hpp"

namespace cpl {

constexpr double kDefaultTol = 1e-12;
constexpr long long kIterationCap = 100000;

struct SpectralResult {
    double lambda = 0.0;
    std::vector<double> perron;  // nonnegative, max entry 1
    long long iterations = 0;
    double residual = 0.0;  // max-norm of A*x - lambda*x
    bool converged = false;
};

// Shifted power iteration on A + I, all-ones start, per component; returns
// the component maximum. Convergence: successive Rayleigh quotients within tol.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol);

// Coarsest equitable partition refining `initial`, by iterated splitting on
// neighbor-count signatures.
VertexPartition equitable_refinement(const Graph& g, const VertexPartition& initial);

struct QuotientMatrix {
    std::vector<std::vector<long long>> entries;  // b_ij
    std::vector<int> block_sizes;
};

// Throws std::invalid_argument naming a violating vertex pair when `part`
// is not equitable on g.
QuotientMatrix quotient_matrix(const Graph& g, const VertexPartition& part);

// Largest eigenvalue of a nonnegative square matrix by power iteration.
double matrix_spectral_radius(const QuotientMatrix& q, double tol = kDefaultTol);

struct JoinedSpectrum {
    double lambda = 0.0;
    std::vector<double> part_entries;  // Perron entry per part block
    double apex_entry = 0.0;           // 1 when t >= 2; implied value when t = 1
    long long iterations = 0;
};

// Spectral radius and blockwise Perron entries of K_{t-1} v K_{n_1,...,n_q}
// from its quotient matrix. Entries satisfy
//   lambda*x_i = sum_j n_j x_j - n_i x_i + (t-1)*x_apex
// and the closed form x_i = (lambda+1)/(lambda+n_i) * x_apex.
JoinedSpectrum joined_multipartite_spectrum(int t, const std::vector<int>& parts,
                                            double tol = kDefaultTol);

// 2e(g)/n, the all-ones Rayleigh quotient.
double rayleigh_lower_bound(const Graph& g);

}  // namespace cpl

#endif
