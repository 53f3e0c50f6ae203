#ifndef ARCHREC_CLUSTER_MODULARITY_HPP
#define ARCHREC_CLUSTER_MODULARITY_HPP

#include <cstdint>

#include "archrec/core/model.hpp"
#include "archrec/depgraph/file_graph.hpp"

namespace archrec::cluster {

// Resolution-parameterized modularity of a partition. Directed weights are
// symmetrized by summation before evaluation; gamma scales the null model.
// Errors when the graph carries no weight.
double modularity(const FileGraph& fg, const Architecture& partition, double gamma);

// Agglomerative greedy modularity maximization: start from singletons and
// keep merging the community pair with the largest positive modularity gain;
// ties go to the lexicographically smallest pair, so the result is fully
// deterministic and the seed is only part of the call contract.
Architecture greedy_modularity(const FileGraph& fg, double gamma, std::uint64_t seed = 0);

} // namespace archrec::cluster

#endif
