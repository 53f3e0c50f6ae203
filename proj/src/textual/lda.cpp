#include "archrec/textual/lda.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "archrec/core/error.hpp"

namespace archrec::textual {

TopicModel TopicModel::train(const std::vector<std::string>& files,
                             const std::vector<WordOccurrence>& weighted, const LdaConfig& cfg) {
    if (files.empty())
        throw InputError("train_lda: no documents");
    if (cfg.topics < 1)
        throw InputError("train_lda: topic count must be >= 1");
    if (cfg.iterations < 1)
        throw InputError("train_lda: iteration count must be >= 1");
    if (cfg.weight_resolution <= 0.0)
        throw InputError("train_lda: weight resolution must be positive");

    TopicModel model;
    model.files_ = files;
    std::sort(model.files_.begin(), model.files_.end());
    model.files_.erase(std::unique(model.files_.begin(), model.files_.end()), model.files_.end());
    model.topics_ = cfg.topics;

    std::map<std::string, std::size_t> doc_index;
    for (std::size_t i = 0; i < model.files_.size(); ++i)
        doc_index.emplace(model.files_[i], i);
    const std::size_t n_docs = model.files_.size();

    // quantized pseudo-counts per (doc, word)
    std::map<std::string, int> vocab;
    std::map<std::pair<std::size_t, int>, std::int64_t> doc_word;
    for (const auto& o : weighted) {
        auto dit = doc_index.find(o.file_id);
        if (dit == doc_index.end())
            throw InputError("train_lda: occurrence for file outside the corpus: " + o.file_id);
        const std::int64_t replicas =
            o.count * std::llround(std::max(0.0, o.weight) / cfg.weight_resolution);
        if (replicas <= 0)
            continue;
        auto [vit, _] = vocab.emplace(o.word, static_cast<int>(vocab.size()));
        doc_word[{dit->second, vit->second}] += replicas;
    }
    if (doc_word.empty())
        throw InputError("train_lda: all documents are empty");

    const int K = cfg.topics;
    const int V = static_cast<int>(vocab.size());
    const double alpha = cfg.effective_alpha();
    const double beta = cfg.beta;

    // token stream in (doc, word-id) order
    struct Token {
        std::int32_t doc;
        std::int32_t word;
        std::int32_t topic;
    };
    std::vector<Token> tokens;
    for (const auto& [key, reps] : doc_word)
        for (std::int64_t r = 0; r < reps; ++r)
            tokens.push_back({static_cast<std::int32_t>(key.first), key.second, 0});

    std::vector<std::int64_t> doc_topic(n_docs * static_cast<std::size_t>(K), 0);
    std::vector<std::int64_t> word_topic(static_cast<std::size_t>(V) * static_cast<std::size_t>(K), 0);
    std::vector<std::int64_t> topic_total(static_cast<std::size_t>(K), 0);
    std::vector<std::int64_t> doc_total(n_docs, 0);

    std::mt19937_64 rng(cfg.seed);
    auto uniform01 = [&rng] {
        return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    };

    for (auto& t : tokens) {
        t.topic = static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(K));
        ++doc_topic[static_cast<std::size_t>(t.doc) * K + t.topic];
        ++word_topic[static_cast<std::size_t>(t.word) * K + t.topic];
        ++topic_total[static_cast<std::size_t>(t.topic)];
        ++doc_total[static_cast<std::size_t>(t.doc)];
    }

    std::vector<double> cumulative(static_cast<std::size_t>(K));
    for (int iter = 0; iter < cfg.iterations; ++iter) {
        for (auto& t : tokens) {
            const auto d = static_cast<std::size_t>(t.doc);
            const auto w = static_cast<std::size_t>(t.word);
            --doc_topic[d * K + t.topic];
            --word_topic[w * K + t.topic];
            --topic_total[static_cast<std::size_t>(t.topic)];

            double acc = 0.0;
            for (int k = 0; k < K; ++k) {
                const double p =
                    (static_cast<double>(doc_topic[d * K + k]) + alpha) *
                    (static_cast<double>(word_topic[w * K + k]) + beta) /
                    (static_cast<double>(topic_total[static_cast<std::size_t>(k)]) + beta * V);
                acc += p;
                cumulative[static_cast<std::size_t>(k)] = acc;
            }
            const double u = uniform01() * acc;
            int k = 0;
            while (k + 1 < K && cumulative[static_cast<std::size_t>(k)] <= u)
                ++k;
            t.topic = static_cast<std::int32_t>(k);

            ++doc_topic[d * K + t.topic];
            ++word_topic[w * K + t.topic];
            ++topic_total[static_cast<std::size_t>(t.topic)];
        }
    }

    model.theta_.assign(n_docs, std::vector<double>(static_cast<std::size_t>(K), 0.0));
    for (std::size_t d = 0; d < n_docs; ++d) {
        if (doc_total[d] == 0) {
            for (int k = 0; k < K; ++k)
                model.theta_[d][static_cast<std::size_t>(k)] = 1.0 / K;
            continue;
        }
        const double denom = static_cast<double>(doc_total[d]) + alpha * K;
        for (int k = 0; k < K; ++k)
            model.theta_[d][static_cast<std::size_t>(k)] =
                (static_cast<double>(doc_topic[d * K + static_cast<std::size_t>(k)]) + alpha) / denom;
    }
    return model;
}

TopicEmbedding TopicModel::embedding(const std::string& file_id) const {
    auto it = std::lower_bound(files_.begin(), files_.end(), file_id);
    if (it == files_.end() || *it != file_id)
        throw InputError("topic_embedding: file was not in the corpus: " + file_id);
    TopicEmbedding e;
    e.file_id = file_id;
    e.distribution = theta_[static_cast<std::size_t>(it - files_.begin())];
    return e;
}

std::vector<TopicEmbedding> TopicModel::all_embeddings() const {
    std::vector<TopicEmbedding> out;
    out.reserve(files_.size());
    for (const auto& f : files_)
        out.push_back(embedding(f));
    return out;
}

} // namespace archrec::textual
