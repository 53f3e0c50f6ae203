#ifndef ARCHREC_METRICS_METRICS_HPP
#define ARCHREC_METRICS_METRICS_HPP

#include <cstdint>
#include <string>

#include "archrec/core/model.hpp"

namespace archrec::metrics {

// All five similarity scores on the percent scale used in reports.
// ari is stored as percent here as well ([-100, 100]).
struct MetricReport {
    double mojofm = 0.0;
    double a2a = 0.0;
    double c2c_cvg = 0.0;
    double c2c_threshold = 0.66;
    double ari = 0.0;
    double a2a_adj = 0.0;
};

// Minimum number of move/join operations transforming a into b.
// Computed through an optimal cluster-tag assignment (maximum-weight
// matching on shared-entity counts) plus residual moves and joins.
// Requires equal universes.
std::int64_t mojo_distance(const Architecture& a, const Architecture& b);

// Worst-case mojo_distance over every partition of an n-element universe
// against the fixed target b. Closed form n - g(b), where g(b) is the
// largest k whose k largest cluster sizes d_1 >= ... >= d_k satisfy
// d_i >= k + 1 - i.
std::int64_t mojo_distance_max(const Architecture& b);

// (1 - mno(a,b) / max mno(*,b)) * 100. Single-entity universes score 100.
double mojo_fm(const Architecture& a, const Architecture& b);

// Transformation-cost similarity; tolerates differing universes.
double a2a(const Architecture& a, const Architecture& b);

// Fraction of a's clusters that some cluster of b overlaps by at least
// th of the larger of the two cluster sizes. th in (0, 1].
double c2c_cvg(const Architecture& a, const Architecture& b, double th);

// Adjusted Rand Index in [-1, 1]. Requires equal universes of >= 2 entities.
double ari(const Architecture& a, const Architecture& b);

// Minimum reassignments of shared entities under an optimal cluster
// matching; the move component of the a2a decomposition.
std::int64_t mto_m(const Architecture& a, const Architecture& b);

// Upper bound on shared-entity reassignments given cluster counts:
// n_shared - ceil(n_shared / max(nc_a, nc_b)).
std::int64_t mto_m_max(std::int64_t n_shared, std::int64_t nc_a, std::int64_t nc_b);

// Reassignment/add-remove decomposition of a2a with per-component
// normalization; symmetric, percent scale, handles differing universes.
double a2a_adj(const Architecture& a, const Architecture& b);

// All five metrics at once. When universes differ, mojo_fm and ari are
// computed on both architectures restricted to the shared universe.
MetricReport evaluate_all(const Architecture& a, const Architecture& b, double th = 0.66);

} // namespace archrec::metrics

#endif
