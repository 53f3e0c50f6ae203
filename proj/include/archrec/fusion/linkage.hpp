#ifndef ARCHREC_FUSION_LINKAGE_HPP
#define ARCHREC_FUSION_LINKAGE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace archrec::fusion {

struct LinkageMerge {
    std::size_t a = 0;  // point indices of the two merged clusters' slots
    std::size_t b = 0;
    double height = 0.0;
};

// Complete-linkage agglomerative clustering over n points via the
// nearest-neighbor-chain algorithm; O(n^2) time, condensed float matrix.
// Returns the n-1 merges in the order performed.
std::vector<LinkageMerge> complete_linkage(std::size_t n,
                                           const std::function<double(std::size_t, std::size_t)>& dist);

// Labels for the k-cluster cut: apply the n-k cheapest merges. Labels are
// consecutive from 0, ordered by each cluster's smallest point index.
std::vector<std::size_t> cut_dendrogram(std::size_t n, std::vector<LinkageMerge> merges,
                                        std::size_t k);

} // namespace archrec::fusion

#endif
