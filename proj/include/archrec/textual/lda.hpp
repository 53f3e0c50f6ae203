#ifndef ARCHREC_TEXTUAL_LDA_HPP
#define ARCHREC_TEXTUAL_LDA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "archrec/core/model.hpp"

namespace archrec::textual {

struct LdaConfig {
    int topics = 100;
    std::uint64_t seed = 42;
    int iterations = 1000;
    double alpha = 0.0;               // 0 => symmetric 50/K
    double beta = 0.01;
    double weight_resolution = 0.05;  // pseudo-count quantization step

    double effective_alpha() const { return alpha > 0.0 ? alpha : 50.0 / topics; }
};

// Latent Dirichlet Allocation via collapsed Gibbs sampling. Word weights
// enter as pseudo-counts: every occurrence instance is replicated
// round(weight / resolution) times. Training is bit-deterministic for a
// fixed (corpus, config) pair. Files that end up with no tokens get the
// uniform distribution.
class TopicModel {
public:
    static TopicModel train(const std::vector<std::string>& files,
                            const std::vector<WordOccurrence>& weighted, const LdaConfig& cfg);

    // K-simplex distribution for a corpus file; unknown files are an error.
    TopicEmbedding embedding(const std::string& file_id) const;

    std::vector<TopicEmbedding> all_embeddings() const;

    const std::vector<std::string>& files() const { return files_; }
    int topics() const { return topics_; }

private:
    std::vector<std::string> files_;   // sorted
    std::vector<std::vector<double>> theta_;
    int topics_ = 0;
};

} // namespace archrec::textual

#endif
