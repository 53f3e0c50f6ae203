#ifndef ARCHREC_CLI_FORMATS_HPP
#define ARCHREC_CLI_FORMATS_HPP

#include <filesystem>
#include <string>

#include "archrec/core/model.hpp"

namespace archrec::cli {

// RSF: one "contain <cluster> <file>" line per file, LF endings, lines
// sorted lexicographically on output.
Architecture read_rsf(const std::filesystem::path& path);
std::string rsf_text(const Architecture& arch);
void write_rsf(const Architecture& arch, const std::filesystem::path& path);

// { "clusters": { name: [file ids...] } }, keys and arrays sorted.
Architecture read_architecture_json(const std::filesystem::path& path);
std::string architecture_json_text(const Architecture& arch);
void write_architecture_json(const Architecture& arch, const std::filesystem::path& path);

// Flat "TYPE = weight" lines.
TypeWeights read_type_weights(const std::filesystem::path& path);
std::string type_weights_text(const TypeWeights& tw);
void write_type_weights(const TypeWeights& tw, const std::filesystem::path& path);

// FNV-1a 64-bit content digest, hex, for provenance echoes.
std::string content_digest(std::string_view bytes);
std::string file_digest(const std::filesystem::path& path);

} // namespace archrec::cli

#endif
