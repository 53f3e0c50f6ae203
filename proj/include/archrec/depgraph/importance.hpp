#ifndef ARCHREC_DEPGRAPH_IMPORTANCE_HPP
#define ARCHREC_DEPGRAPH_IMPORTANCE_HPP

#include <map>
#include <string>

#include "archrec/core/model.hpp"

namespace archrec {

// Subgraph of Function entities and the edges between them.
DependencyGraph function_subgraph(const DependencyGraph& g);

// Fixed point of the inverse PageRank recurrence
//   score(i) = d * sum over successors j of score(j) / in_degree(j) + (1-d)/N.
// Parallel edges collapse; nodes that reach nothing keep the (1-d)/N floor.
// Iteration stops when the largest per-node change drops below tol.
std::map<std::string, double> inverse_pagerank(const DependencyGraph& g, double damping = 0.85,
                                               double tol = 1e-9, int max_iter = 200);

// Fills Entity::importance across all granularities from function scores:
// functions keep their score, files and classes sum the functions they
// (transitively) contain, variables and other entities split their parent's
// importance evenly among the parent's non-function children.
DependencyGraph propagate_importance(DependencyGraph g,
                                     const std::map<std::string, double>& fn_scores);

// Sets every entity importance to the same value (weighting-ablation mode).
DependencyGraph uniform_importance(DependencyGraph g, double value = 1.0);

} // namespace archrec

#endif
