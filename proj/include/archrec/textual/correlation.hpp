#ifndef ARCHREC_TEXTUAL_CORRELATION_HPP
#define ARCHREC_TEXTUAL_CORRELATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "archrec/core/model.hpp"

namespace archrec::textual {

// Pearson correlation of two equal-length topic distributions.
// Either vector constant (uniform embeddings included) => 0.
double topic_correlation(const TopicEmbedding& a, const TopicEmbedding& b);

// Precomputed standardized embeddings for cheap pairwise correlations.
class TopicCorrelations {
public:
    explicit TopicCorrelations(std::vector<TopicEmbedding> embeddings);

    double corr(std::size_t i, std::size_t j) const;
    double corr_by_id(const std::string& a, const std::string& b) const;

    const std::vector<std::string>& files() const { return files_; }
    std::optional<std::size_t> index_of(const std::string& file) const;

private:
    std::vector<std::string> files_;             // sorted
    std::vector<std::vector<double>> standardized_;  // zero vector when constant
};

} // namespace archrec::textual

#endif
