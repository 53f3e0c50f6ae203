#include "archrec/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "archrec/core/error.hpp"
#include "archrec/metrics/assignment.hpp"

namespace archrec::metrics {
namespace {

std::vector<const std::set<std::string>*> cluster_list(const Architecture& a) {
    std::vector<const std::set<std::string>*> out;
    out.reserve(a.cluster_count());
    for (const auto& [_, files] : a.clusters())
        out.push_back(&files);
    return out;
}

std::int64_t intersection_size(const std::set<std::string>& x, const std::set<std::string>& y) {
    std::int64_t n = 0;
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

// Contingency table of shared-entity counts between the clusters of a and b.
std::vector<std::vector<std::int64_t>> overlap_table(const Architecture& a, const Architecture& b) {
    auto ca = cluster_list(a);
    auto cb = cluster_list(b);
    std::vector<std::vector<std::int64_t>> ov(ca.size(), std::vector<std::int64_t>(cb.size(), 0));
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j)
            ov[i][j] = intersection_size(*ca[i], *cb[j]);
    return ov;
}

// aco: entity additions + entity placements + cluster additions.
std::int64_t aco(const Architecture& a) {
    return 2 * static_cast<std::int64_t>(a.universe().size()) +
           static_cast<std::int64_t>(a.cluster_count());
}

std::int64_t shared_count(const Architecture& a, const Architecture& b) {
    return intersection_size(a.universe(), b.universe());
}

} // namespace

std::int64_t mto_m(const Architecture& a, const Architecture& b) {
    std::int64_t n_shared = shared_count(a, b);
    if (n_shared == 0)
        return 0;
    auto ov = overlap_table(a, b);
    std::vector<std::vector<double>> w(ov.size());
    for (std::size_t i = 0; i < ov.size(); ++i)
        w[i].assign(ov[i].begin(), ov[i].end());
    return n_shared - static_cast<std::int64_t>(std::llround(assignment_max(w)));
}

std::int64_t mojo_distance(const Architecture& a, const Architecture& b) {
    if (a.universe() != b.universe())
        throw InputError("mojo_distance: architectures partition different universes");
    if (a.universe().empty())
        throw InputError("mojo_distance: empty universe");

    const std::int64_t n = static_cast<std::int64_t>(a.universe().size());
    const std::int64_t l = static_cast<std::int64_t>(a.cluster_count());
    auto ov = overlap_table(a, b);
    const std::size_t m = b.cluster_count();

    // Row i may take a real tag (overlap + 1, the +1 buying a distinct tag)
    // or fall back to its best overlap with a shared tag (the dummy column).
    std::vector<std::vector<double>> w(ov.size(), std::vector<double>(m + ov.size(), 0.0));
    for (std::size_t i = 0; i < ov.size(); ++i) {
        std::int64_t best = 0;
        for (std::size_t j = 0; j < m; ++j) {
            best = std::max(best, ov[i][j]);
            w[i][j] = static_cast<double>(ov[i][j] + 1);
        }
        w[i][m + i] = static_cast<double>(best);
    }
    const std::int64_t gain = static_cast<std::int64_t>(std::llround(assignment_max(w)));
    return n + l - gain;
}

std::int64_t mojo_distance_max(const Architecture& b) {
    if (b.universe().empty())
        throw InputError("mojo_distance_max: empty universe");
    std::vector<std::int64_t> sizes;
    sizes.reserve(b.cluster_count());
    for (const auto& [_, files] : b.clusters())
        sizes.push_back(static_cast<std::int64_t>(files.size()));
    std::sort(sizes.rbegin(), sizes.rend());

    std::int64_t g = 0;
    for (std::size_t k = 1; k <= sizes.size(); ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (sizes[i] < static_cast<std::int64_t>(k - i)) {
                ok = false;
                break;
            }
        }
        if (ok)
            g = static_cast<std::int64_t>(k);
    }
    return static_cast<std::int64_t>(b.universe().size()) - g;
}

double mojo_fm(const Architecture& a, const Architecture& b) {
    const std::int64_t mno = mojo_distance(a, b);
    const std::int64_t denom = mojo_distance_max(b);
    if (denom == 0) {
        // Single-entity universe: the only partition equals b.
        if (mno != 0)
            throw InputError("mojo_fm: degenerate target with nonzero distance");
        return 100.0;
    }
    return (1.0 - static_cast<double>(mno) / static_cast<double>(denom)) * 100.0;
}

double a2a(const Architecture& a, const Architecture& b) {
    const std::int64_t denom = aco(a) + aco(b);
    if (denom == 0)
        throw InputError("a2a: both architectures are empty");

    const std::int64_t n_shared = shared_count(a, b);
    const std::int64_t removed = static_cast<std::int64_t>(a.universe().size()) - n_shared;
    const std::int64_t added = static_cast<std::int64_t>(b.universe().size()) - n_shared;
    const std::int64_t l = static_cast<std::int64_t>(a.cluster_count());
    const std::int64_t m = static_cast<std::int64_t>(b.cluster_count());

    // Matching a cluster pair keeps its shared entities in place and saves
    // one cluster removal plus one cluster addition.
    auto ov = overlap_table(a, b);
    std::vector<std::vector<double>> w(ov.size());
    for (std::size_t i = 0; i < ov.size(); ++i) {
        w[i].resize(ov[i].size());
        for (std::size_t j = 0; j < ov[i].size(); ++j)
            w[i][j] = static_cast<double>(ov[i][j] + 2);
    }
    const std::int64_t gain = static_cast<std::int64_t>(std::llround(assignment_max(w)));
    const std::int64_t mto = n_shared + removed + added + l + m - gain;
    return (1.0 - static_cast<double>(mto) / static_cast<double>(denom)) * 100.0;
}

double c2c_cvg(const Architecture& a, const Architecture& b, double th) {
    if (!(th > 0.0 && th <= 1.0))
        throw InputError("c2c_cvg: threshold must be in (0, 1]");
    if (a.cluster_count() == 0)
        throw InputError("c2c_cvg: empty source architecture");

    auto ca = cluster_list(a);
    auto cb = cluster_list(b);
    std::int64_t covered = 0;
    for (const auto* x : ca) {
        for (const auto* y : cb) {
            const double larger = static_cast<double>(std::max(x->size(), y->size()));
            if (static_cast<double>(intersection_size(*x, *y)) >= th * larger) {
                ++covered;
                break;
            }
        }
    }
    return static_cast<double>(covered) / static_cast<double>(a.cluster_count()) * 100.0;
}

double ari(const Architecture& a, const Architecture& b) {
    if (a.universe() != b.universe())
        throw InputError("ari: architectures partition different universes");
    const std::int64_t n = static_cast<std::int64_t>(a.universe().size());
    if (n < 2)
        throw InputError("ari: needs at least 2 entities");

    auto choose2 = [](std::int64_t x) { return x * (x - 1) / 2; };
    auto ov = overlap_table(a, b);

    double sum_nij = 0.0, sum_ai = 0.0, sum_bj = 0.0;
    for (const auto& row : ov)
        for (std::int64_t nij : row)
            sum_nij += static_cast<double>(choose2(nij));
    for (const auto& [_, files] : a.clusters())
        sum_ai += static_cast<double>(choose2(static_cast<std::int64_t>(files.size())));
    for (const auto& [_, files] : b.clusters())
        sum_bj += static_cast<double>(choose2(static_cast<std::int64_t>(files.size())));

    const double expected = sum_ai * sum_bj / static_cast<double>(choose2(n));
    const double numerator = sum_nij - expected;
    const double denominator = 0.5 * (sum_ai + sum_bj) - expected;
    if (denominator == 0.0)
        return numerator == 0.0 ? 1.0 : 0.0;
    return numerator / denominator;
}

std::int64_t mto_m_max(std::int64_t n_shared, std::int64_t nc_a, std::int64_t nc_b) {
    if (n_shared <= 0)
        return 0;
    const std::int64_t nc = std::max(nc_a, nc_b);
    if (nc < 1)
        throw InputError("mto_m_max: cluster counts must be >= 1");
    return n_shared - (n_shared + nc - 1) / nc;
}

double a2a_adj(const Architecture& a, const Architecture& b) {
    if (a.universe().empty() && b.universe().empty())
        throw InputError("a2a_adj: both architectures are empty");

    const std::int64_t n_shared = shared_count(a, b);
    const std::int64_t n_diff =
        static_cast<std::int64_t>(a.universe().size()) + static_cast<std::int64_t>(b.universe().size()) -
        2 * n_shared;
    const std::int64_t nc_a = static_cast<std::int64_t>(a.cluster_count());
    const std::int64_t nc_b = static_cast<std::int64_t>(b.cluster_count());

    const std::int64_t moves = mto_m(a, b);
    const std::int64_t moves_max =
        n_shared > 0 ? mto_m_max(n_shared, std::max<std::int64_t>(nc_a, 1), std::max<std::int64_t>(nc_b, 1)) : 0;
    const double move_term = moves_max > 0 ? static_cast<double>(moves) / static_cast<double>(moves_max) : 0.0;

    const std::int64_t ar_cost = n_diff + std::llabs(nc_a - nc_b);
    const std::int64_t ar_denom = aco(a) + aco(b);
    const double ar_term = ar_denom > 0 ? static_cast<double>(ar_cost) / static_cast<double>(ar_denom) : 0.0;

    const double scale = static_cast<double>(n_shared + n_diff + std::max(nc_a, nc_b));
    const double alpha = static_cast<double>(n_shared + std::min(nc_a, nc_b)) / scale;
    const double beta = static_cast<double>(n_diff + std::llabs(nc_a - nc_b)) / scale;

    return (1.0 - alpha * move_term - beta * ar_term) * 100.0;
}

MetricReport evaluate_all(const Architecture& a, const Architecture& b, double th) {
    MetricReport report;
    report.c2c_threshold = th;
    report.a2a = a2a(a, b);
    report.a2a_adj = a2a_adj(a, b);
    report.c2c_cvg = c2c_cvg(a, b, th);

    const Architecture* pa = &a;
    const Architecture* pb = &b;
    Architecture ra, rb;
    if (a.universe() != b.universe()) {
        std::set<std::string> shared;
        std::set_intersection(a.universe().begin(), a.universe().end(), b.universe().begin(),
                              b.universe().end(), std::inserter(shared, shared.end()));
        if (shared.empty())
            throw InputError("evaluate_all: architectures share no entities");
        ra = a.restricted_to(shared);
        rb = b.restricted_to(shared);
        pa = &ra;
        pb = &rb;
    }
    report.mojofm = mojo_fm(*pa, *pb);
    report.ari = ari(*pa, *pb) * 100.0;
    return report;
}

} // namespace archrec::metrics
