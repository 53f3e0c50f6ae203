#ifndef ARCHREC_DEPGRAPH_WEIGHTING_HPP
#define ARCHREC_DEPGRAPH_WEIGHTING_HPP

#include "archrec/core/model.hpp"
#include "archrec/depgraph/file_graph.hpp"

namespace archrec {

// Edge weight = multiplicity * type weight * mean endpoint importance.
// Requires importances to be set and tw to cover every type present.
DependencyGraph weigh_edges(DependencyGraph g, const TypeWeights& tw);

// File-level graph: every file entity becomes a node; the weight between two
// distinct files is the sum of the weighted entity edges crossing them.
// Intra-file edges (including Contain edges into a file's own members)
// never surface, so the result is self-loop free.
FileGraph aggregate_to_files(const DependencyGraph& g);

} // namespace archrec

#endif
