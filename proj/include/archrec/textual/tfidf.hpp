#ifndef ARCHREC_TEXTUAL_TFIDF_HPP
#define ARCHREC_TEXTUAL_TFIDF_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "archrec/core/model.hpp"

namespace archrec::textual {

// Multiplier per word origin. Filenames say the most, comments the least.
struct SourceKindWeights {
    double filename = 3.0;
    double definition = 2.0;
    double comment = 1.0;

    double of(SourceKind kind) const;
    void validate() const;  // all positive
};

// tf(file, word) = count / total words of file; idf(word) = ln(files / df).
// Computed on raw counts, before any source-kind weighting.
std::map<std::pair<std::string, std::string>, double> tf_idf(const std::vector<WordOccurrence>& occs);

// Weight per occurrence: source-kind weight x entity factor x tf-idf.
// The entity factor is the defining entity's importance normalized by the
// largest entity importance within the same file; occurrences without an
// entity (filenames, comments) get factor 1.
std::vector<WordOccurrence> weigh_words(std::vector<WordOccurrence> occs,
                                        const SourceKindWeights& skw, const DependencyGraph& g);

} // namespace archrec::textual

#endif
