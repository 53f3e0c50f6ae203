#ifndef ARCHREC_INGEST_TEXT_HPP
#define ARCHREC_INGEST_TEXT_HPP

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "archrec/core/model.hpp"

namespace archrec {

// Splits an identifier on camel-case boundaries, underscores, hyphens and
// digits; lowercases the pieces and drops empty ones. Idempotent on its own
// output.
std::vector<std::string> tokenize_identifier(std::string_view name);

struct ExtractResult {
    std::vector<WordOccurrence> occurrences;  // sorted (file, kind, word, entity)
    std::vector<std::string> skips;           // "SKIP <path> <reason>" lines
};

// Collects words from exactly three places per file: the filename, the names
// of entities defined there (classes, functions, global variables, matched
// against the file text), and comments. File entity names are paths relative
// to source_root. Unreadable files are skipped and reported, never fatal.
ExtractResult extract_text(const std::filesystem::path& source_root, const DependencyGraph& g);

// Comment text of one source buffer, using the comment syntax of the path's
// language. String and character literals never open a comment.
std::vector<std::string> scan_comments(std::string_view path, std::string_view content);

// Stop-word removal (English + per-language keywords), length filtering and
// stemming. Counts of occurrences that collapse to the same stem merge.
std::vector<WordOccurrence> preprocess_words(std::vector<WordOccurrence> occs,
                                             const std::set<std::string>& extra_stopwords = {});

// Canonical occurrence order: (file, kind, word, entity); equal keys merge.
std::vector<WordOccurrence> merge_occurrences(std::vector<WordOccurrence> occs);

} // namespace archrec

#endif
