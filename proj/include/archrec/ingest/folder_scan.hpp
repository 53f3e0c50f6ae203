#ifndef ARCHREC_INGEST_FOLDER_SCAN_HPP
#define ARCHREC_INGEST_FOLDER_SCAN_HPP

#include <string>
#include <utility>
#include <vector>

#include "archrec/core/model.hpp"

namespace archrec {

// Mirrors the directory hierarchy implied by the files' relative paths.
// Each file attaches to its immediate folder; intermediate folders appear
// even when they hold no files directly.
FolderTree scan_folders(const std::vector<std::pair<std::string, std::string>>& id_and_relpath);

// Convenience over the graph's File entities (name = relative path).
FolderTree scan_folders(const DependencyGraph& g);

} // namespace archrec

#endif
