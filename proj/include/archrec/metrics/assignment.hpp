#ifndef ARCHREC_METRICS_ASSIGNMENT_HPP
#define ARCHREC_METRICS_ASSIGNMENT_HPP

#include <vector>

namespace archrec::metrics {

// Maximum total value of an injective partial assignment of rows to columns.
// All cells must be >= 0; leaving a row or column unassigned contributes 0,
// so with non-negative cells the optimum equals the best full matching on a
// zero-padded square matrix. O(n^3) Hungarian method.
double assignment_max(const std::vector<std::vector<double>>& value);

} // namespace archrec::metrics

#endif
