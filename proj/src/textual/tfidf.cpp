#include "archrec/textual/tfidf.hpp"

#include <cmath>
#include <set>
#include <unordered_map>

#include "archrec/core/error.hpp"

namespace archrec::textual {

double SourceKindWeights::of(SourceKind kind) const {
    switch (kind) {
    case SourceKind::Filename: return filename;
    case SourceKind::Definition: return definition;
    case SourceKind::Comment: return comment;
    }
    return comment;
}

void SourceKindWeights::validate() const {
    if (filename <= 0.0 || definition <= 0.0 || comment <= 0.0)
        throw InputError("source kind weights must be positive");
}

std::map<std::pair<std::string, std::string>, double>
tf_idf(const std::vector<WordOccurrence>& occs) {
    std::unordered_map<std::string, std::int64_t> file_total;
    std::map<std::pair<std::string, std::string>, std::int64_t> counts;
    std::unordered_map<std::string, std::int64_t> document_frequency;

    for (const auto& o : occs) {
        file_total[o.file_id] += o.count;
        counts[{o.file_id, o.word}] += o.count;
    }
    for (const auto& [key, _] : counts)
        ++document_frequency[key.second];

    const double n_files = static_cast<double>(file_total.size());
    std::map<std::pair<std::string, std::string>, double> out;
    for (const auto& [key, count] : counts) {
        const double tf = static_cast<double>(count) / static_cast<double>(file_total.at(key.first));
        const double idf = std::log(n_files / static_cast<double>(document_frequency.at(key.second)));
        out.emplace(key, tf * idf);
    }
    return out;
}

std::vector<WordOccurrence> weigh_words(std::vector<WordOccurrence> occs,
                                        const SourceKindWeights& skw, const DependencyGraph& g) {
    skw.validate();
    const auto tfidf = tf_idf(occs);

    // largest entity importance per file, over the file's member entities
    std::unordered_map<std::string, double> max_importance;
    for (const Entity& e : g.entities()) {
        if (e.kind == EntityKind::File || !e.importance)
            continue;
        auto [it, inserted] = max_importance.emplace(e.file_id, *e.importance);
        if (!inserted && *e.importance > it->second)
            it->second = *e.importance;
    }

    for (auto& o : occs) {
        double factor = 1.0;
        if (o.entity_id) {
            const Entity* e = g.find_entity(*o.entity_id);
            if (!e)
                throw PipelineError("weigh_words: occurrence names unknown entity " + *o.entity_id);
            if (!e->importance)
                throw PipelineError("weigh_words: entity importance unset: " + *o.entity_id);
            const auto it = max_importance.find(o.file_id);
            if (it != max_importance.end() && it->second > 0.0)
                factor = *e->importance / it->second;
        }
        o.weight = skw.of(o.source_kind) * factor * tfidf.at({o.file_id, o.word});
    }
    return occs;
}

} // namespace archrec::textual
