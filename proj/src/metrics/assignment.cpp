#include "archrec/metrics/assignment.hpp"

#include <cassert>
#include <cstddef>
#include <limits>

namespace archrec::metrics {

// Potential-based Hungarian algorithm on a square cost matrix, minimizing.
// Rows/columns are 1-based internally; row p[j] is assigned to column j.
static double hungarian_min(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        minv.assign(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = p[j0], j1 = 0;
            double delta = inf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    double total = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
        if (p[j] != 0)
            total += cost[p[j] - 1][j - 1];
    return total;
}

double assignment_max(const std::vector<std::vector<double>>& value) {
    if (value.empty())
        return 0.0;
    const std::size_t rows = value.size();
    std::size_t cols = 0;
    for (const auto& row : value)
        if (row.size() > cols)
            cols = row.size();
    if (cols == 0)
        return 0.0;

    const std::size_t n = rows > cols ? rows : cols;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < value[i].size(); ++j) {
            assert(value[i][j] >= 0.0);
            cost[i][j] = -value[i][j];
        }
    }
    return -hungarian_min(cost);
}

} // namespace archrec::metrics
