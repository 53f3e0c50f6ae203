#ifndef ARCHREC_DEPGRAPH_OPTIMIZE_HPP
#define ARCHREC_DEPGRAPH_OPTIMIZE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "archrec/core/model.hpp"

namespace archrec {

struct OptimizeResult {
    TypeWeights weights;
    double best_quality = 0.0;
    int evaluations = 0;
    // (evaluation number, mean modularity) per improvement, for the log.
    std::vector<std::pair<int, double>> improvements;
};

// Sequential random/adaptive search over the [0.1, 10]^13 weight box that
// maximizes the mean modularity of greedy clusterings of the corpus graphs.
// Stops at budget exhaustion or once the best improvement falls below 1e-5.
// Entity importances are computed once per graph; candidates only re-weigh
// edges. Deterministic for a fixed seed.
OptimizeResult optimize_type_weights(const std::vector<DependencyGraph>& corpus, int budget,
                                     std::uint64_t seed);

} // namespace archrec

#endif
