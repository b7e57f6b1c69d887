#include "cpl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cpl {

namespace {

struct PowerResult {
    double lambda = 0.0;
    std::vector<double> vec;
    long long iterations = 0;
    bool converged = false;
};

// Power iteration on M + I; the shift breaks period-2 oscillation on
// bipartite structure. Stops when the Rayleigh quotient settles within tol
// and the normalized vector change is small.
template <class Apply>
PowerResult power_iterate(int dim, Apply&& apply, double tol) {
    PowerResult out;
    if (dim == 0) return out;
    std::vector<double> x(dim, 1.0), y(dim);
    double prev_rayleigh = 0.0;
    bool have_prev = false;
    for (long long it = 1; it <= kIterationCap; ++it) {
        apply(x, y);  // y = M x
        double num = 0.0, den = 0.0;
        for (int i = 0; i < dim; ++i) {
            num += x[i] * y[i];
            den += x[i] * x[i];
        }
        double rayleigh = num / den;
        // shifted step
        double maxv = 0.0;
        for (int i = 0; i < dim; ++i) {
            y[i] += x[i];
            maxv = std::max(maxv, std::fabs(y[i]));
        }
        if (maxv == 0.0) {  // M = 0
            out.lambda = 0.0;
            out.vec = x;
            out.iterations = it;
            out.converged = true;
            return out;
        }
        double vec_change = 0.0;
        for (int i = 0; i < dim; ++i) {
            y[i] /= maxv;
            vec_change = std::max(vec_change, std::fabs(y[i] - x[i]));
        }
        x.swap(y);
        out.iterations = it;
        if (have_prev && std::fabs(rayleigh - prev_rayleigh) <= tol &&
            vec_change <= std::max(tol * 100.0, 1e-13)) {
            out.lambda = rayleigh;
            out.vec = x;
            out.converged = true;
            return out;
        }
        prev_rayleigh = rayleigh;
        have_prev = true;
    }
    out.lambda = prev_rayleigh;
    out.vec = x;
    return out;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
    if (g.order() < 1) throw std::invalid_argument("spectral_radius needs |g| >= 1");
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    SpectralResult best;
    best.lambda = -1.0;
    for (const auto& comp : components(g)) {
        int dim = static_cast<int>(comp.size());
        std::vector<int> local(g.order(), -1);
        for (int i = 0; i < dim; ++i) local[comp[i]] = i;
        auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
            for (int i = 0; i < dim; ++i) {
                double acc = 0.0;
                g.for_each_neighbor(comp[i], [&](int v) { acc += x[local[v]]; });
                y[i] = acc;
            }
        };
        PowerResult pr = power_iterate(dim, apply, tol);
        if (pr.lambda > best.lambda) {
            best.lambda = pr.lambda;
            best.iterations = pr.iterations;
            best.converged = pr.converged;
            best.perron.assign(g.order(), 0.0);
            for (int i = 0; i < dim; ++i) best.perron[comp[i]] = pr.vec[i];
        }
    }
    // normalize to max entry 1 and report the max-norm residual
    double maxv = *std::max_element(best.perron.begin(), best.perron.end());
    if (maxv > 0)
        for (double& v : best.perron) v /= maxv;
    double res = 0.0;
    for (int u = 0; u < g.order(); ++u) {
        double acc = 0.0;
        g.for_each_neighbor(u, [&](int v) { acc += best.perron[v]; });
        res = std::max(res, std::fabs(acc - best.lambda * best.perron[u]));
    }
    best.residual = res;
    return best;
}

VertexPartition equitable_refinement(const Graph& g, const VertexPartition& initial) {
    initial.validate(g.order());
    std::vector<std::vector<int>> blocks = initial.blocks;
    while (true) {
        std::vector<int> block_of(g.order());
        for (size_t b = 0; b < blocks.size(); ++b)
            for (int v : blocks[b]) block_of[v] = static_cast<int>(b);
        std::vector<std::vector<int>> next;
        bool changed = false;
        for (const auto& block : blocks) {
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : block) {
                std::vector<int> sig(blocks.size(), 0);
                g.for_each_neighbor(v, [&](int u) { ++sig[block_of[u]]; });
                split[sig].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [sig, verts] : split) next.push_back(std::move(verts));
        }
        blocks = std::move(next);
        if (!changed) break;
    }
    VertexPartition out;
    out.blocks = std::move(blocks);
    return out;
}

QuotientMatrix quotient_matrix(const Graph& g, const VertexPartition& part) {
    part.validate(g.order());
    size_t nb = part.blocks.size();
    std::vector<int> block_of(g.order());
    for (size_t b = 0; b < nb; ++b)
        for (int v : part.blocks[b]) block_of[v] = static_cast<int>(b);
    QuotientMatrix q;
    q.entries.assign(nb, std::vector<long long>(nb, 0));
    for (size_t b = 0; b < nb; ++b) {
        q.block_sizes.push_back(static_cast<int>(part.blocks[b].size()));
        bool first = true;
        std::vector<long long> ref(nb, 0);
        for (int v : part.blocks[b]) {
            std::vector<long long> counts(nb, 0);
            g.for_each_neighbor(v, [&](int u) { ++counts[block_of[u]]; });
            if (first) {
                ref = counts;
                first = false;
            } else if (counts != ref) {
                throw std::invalid_argument(
                    "partition not equitable: vertices " +
                    std::to_string(part.blocks[b][0]) + " and " + std::to_string(v) +
                    " of block " + std::to_string(b) + " disagree");
            }
        }
        q.entries[b] = ref;
    }
    return q;
}

namespace {

PowerResult matrix_power(const QuotientMatrix& q, double tol) {
    int dim = static_cast<int>(q.entries.size());
    auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (int i = 0; i < dim; ++i) {
            double acc = 0.0;
            for (int j = 0; j < dim; ++j) acc += static_cast<double>(q.entries[i][j]) * x[j];
            y[i] = acc;
        }
    };
    return power_iterate(dim, apply, tol);
}

}  // namespace

double matrix_spectral_radius(const QuotientMatrix& q, double tol) {
    if (q.entries.empty()) throw std::invalid_argument("empty matrix");
    for (const auto& row : q.entries) {
        if (row.size() != q.entries.size())
            throw std::invalid_argument("matrix not square");
        for (long long v : row)
            if (v < 0) throw std::invalid_argument("matrix entries must be nonnegative");
    }
    return matrix_power(q, tol).lambda;
}

JoinedSpectrum joined_multipartite_spectrum(int t, const std::vector<int>& parts,
                                            double tol) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (parts.empty()) throw std::invalid_argument("parts must be nonempty");
    for (int s : parts)
        if (s < 1) throw std::invalid_argument("degenerate part of size 0");
    int q = static_cast<int>(parts.size());
    bool has_apex = (t >= 2);
    int dim = q + (has_apex ? 1 : 0);
    QuotientMatrix m;
    m.entries.assign(dim, std::vector<long long>(dim, 0));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) m.entries[i][j] = (i == j) ? 0 : parts[j];
        if (has_apex) m.entries[i][q] = t - 1;
        m.block_sizes.push_back(parts[i]);
    }
    if (has_apex) {
        for (int j = 0; j < q; ++j) m.entries[q][j] = parts[j];
        m.entries[q][q] = t - 2;
        m.block_sizes.push_back(t - 1);
    }
    PowerResult pr = matrix_power(m, tol);
    JoinedSpectrum out;
    out.lambda = pr.lambda;
    out.iterations = pr.iterations;
    out.part_entries.assign(pr.vec.begin(), pr.vec.begin() + q);
    if (has_apex) {
        double apex = pr.vec[q];
        for (double& v : out.part_entries) v /= apex;
        out.apex_entry = 1.0;
    } else {
        double maxv = *std::max_element(out.part_entries.begin(), out.part_entries.end());
        for (double& v : out.part_entries) v /= maxv;
        // entry a joined dominating clique vertex would take; makes the closed
        // form x_i = (lambda+1)/(lambda+n_i) * x_apex hold identically at t = 1
        double sum = 0.0;
        for (int j = 0; j < q; ++j) sum += parts[j] * out.part_entries[j];
        out.apex_entry = sum / (out.lambda + 1.0);
    }
    return out;
}

double rayleigh_lower_bound(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("needs |g| >= 1");
    return 2.0 * static_cast<double>(g.edge_count()) / g.order();
}

}  // namespace cpl
