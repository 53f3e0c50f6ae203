#ifndef ARCHREC_INGEST_DEPENDENCY_JSON_HPP
#define ARCHREC_INGEST_DEPENDENCY_JSON_HPP

#include <filesystem>

#include "archrec/core/model.hpp"

namespace archrec {

// Canonical dependency format:
//   { "entities": [ {"id", "kind", "name", "file", "parent"} ],
//     "edges":    [ {"src", "dst", "type", "count"} ] }
// Parsing validates the full set of graph invariants and reports every
// offending record, not just the first.
DependencyGraph parse_dependency_json(const std::filesystem::path& path);
DependencyGraph parse_dependency_json_text(const std::string& text, const std::string& origin);

void write_dependency_json(const DependencyGraph& g, const std::filesystem::path& path);
std::string dependency_json_text(const DependencyGraph& g);

} // namespace archrec

#endif
