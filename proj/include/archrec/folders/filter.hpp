#ifndef ARCHREC_FOLDERS_FILTER_HPP
#define ARCHREC_FOLDERS_FILTER_HPP

#include "archrec/core/model.hpp"
#include "archrec/depgraph/file_graph.hpp"

namespace archrec::folders {

// Drops folders whose files talk more to the outside than to each other:
// leaves upward, a non-root folder whose cross-boundary edge weight exceeds
// its internal edge weight (both over its whole subtree) is merged into its
// parent. Ties keep the folder. Idempotent.
FolderTree filter_folders(const FolderTree& tree, const FileGraph& fg);

// One cluster per surviving folder that directly holds files, named by its
// path; files sitting in the root form the "ROOT" cluster.
Architecture folder_partition(const FolderTree& tree);

} // namespace archrec::folders

#endif
