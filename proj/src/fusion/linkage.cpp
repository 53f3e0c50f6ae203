#include "archrec/fusion/linkage.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "archrec/core/error.hpp"

namespace archrec::fusion {
namespace {

// condensed upper-triangle index for i < j
inline std::size_t tri(std::size_t n, std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

} // namespace

std::vector<LinkageMerge> complete_linkage(std::size_t n,
                                           const std::function<double(std::size_t, std::size_t)>& dist) {
    std::vector<LinkageMerge> merges;
    if (n < 2)
        return merges;

    std::vector<float> d(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d[tri(n, i, j)] = static_cast<float>(dist(i, j));

    auto dget = [&](std::size_t i, std::size_t j) -> float& {
        return i < j ? d[tri(n, i, j)] : d[tri(n, j, i)];
    };

    std::vector<bool> active(n, true);
    std::vector<std::size_t> chain;
    chain.reserve(n);
    std::size_t remaining = n;

    while (remaining > 1) {
        if (chain.empty()) {
            for (std::size_t i = 0; i < n; ++i) {
                if (active[i]) {
                    chain.push_back(i);
                    break;
                }
            }
        }
        while (true) {
            const std::size_t x = chain.back();
            const std::size_t prev = chain.size() >= 2 ? chain[chain.size() - 2] : n;

            // nearest active neighbor; the chain predecessor wins ties so
            // reciprocal pairs terminate
            std::size_t best = n;
            float best_d = std::numeric_limits<float>::infinity();
            if (prev < n) {
                best = prev;
                best_d = dget(x, prev);
            }
            for (std::size_t y = 0; y < n; ++y) {
                if (!active[y] || y == x || y == prev)
                    continue;
                const float dy = dget(x, y);
                if (dy < best_d) {
                    best_d = dy;
                    best = y;
                }
            }

            if (best == prev) {
                // reciprocal nearest neighbors: merge x and prev
                const std::size_t lo = std::min(x, prev), hi = std::max(x, prev);
                merges.push_back({lo, hi, static_cast<double>(best_d)});
                chain.pop_back();
                chain.pop_back();
                active[hi] = false;
                for (std::size_t y = 0; y < n; ++y) {
                    if (!active[y] || y == lo)
                        continue;
                    dget(lo, y) = std::max(dget(lo, y), dget(hi, y));
                }
                --remaining;
                break;
            }
            chain.push_back(best);
        }
    }
    return merges;
}

std::vector<std::size_t> cut_dendrogram(std::size_t n, std::vector<LinkageMerge> merges,
                                        std::size_t k) {
    if (k < 1 || k > n)
        throw InputError("cut_dendrogram: cluster count out of range");

    std::stable_sort(merges.begin(), merges.end(),
                     [](const LinkageMerge& x, const LinkageMerge& y) { return x.height < y.height; });

    std::vector<std::size_t> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };
    for (std::size_t m = 0; m + k < n && m < merges.size(); ++m) {
        const std::size_t ra = find(merges[m].a);
        const std::size_t rb = find(merges[m].b);
        root[std::max(ra, rb)] = std::min(ra, rb);  // smallest index represents
    }

    std::vector<std::size_t> label(n, n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (label[r] == n)
            label[r] = next++;
        label[i] = label[r];
    }
    return label;
}

} // namespace archrec::fusion
