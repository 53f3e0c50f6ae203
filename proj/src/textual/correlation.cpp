#include "archrec/textual/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "archrec/core/error.hpp"

namespace archrec::textual {
namespace {

// (x - mean) / (sd * sqrt(K)) so correlations reduce to dot products;
// all-zero for constant vectors.
std::vector<double> standardize(const std::vector<double>& x) {
    const std::size_t k = x.size();
    double mean = 0.0;
    for (double v : x)
        mean += v;
    mean /= static_cast<double>(k);
    double var = 0.0;
    for (double v : x)
        var += (v - mean) * (v - mean);
    std::vector<double> out(k, 0.0);
    if (var <= 0.0)
        return out;
    const double scale = 1.0 / std::sqrt(var);
    for (std::size_t i = 0; i < k; ++i)
        out[i] = (x[i] - mean) * scale;
    return out;
}

double clamp_unit(double v) {
    return std::clamp(v, -1.0, 1.0);
}

} // namespace

double topic_correlation(const TopicEmbedding& a, const TopicEmbedding& b) {
    if (a.distribution.size() != b.distribution.size())
        throw InputError("topic_correlation: embeddings have different lengths");
    if (a.distribution.empty())
        throw InputError("topic_correlation: empty embeddings");
    const auto ua = standardize(a.distribution);
    const auto ub = standardize(b.distribution);
    double dot = 0.0;
    for (std::size_t i = 0; i < ua.size(); ++i)
        dot += ua[i] * ub[i];
    return clamp_unit(dot);
}

TopicCorrelations::TopicCorrelations(std::vector<TopicEmbedding> embeddings) {
    std::sort(embeddings.begin(), embeddings.end(),
              [](const TopicEmbedding& a, const TopicEmbedding& b) { return a.file_id < b.file_id; });
    std::size_t k = 0;
    for (const auto& e : embeddings) {
        if (k == 0)
            k = e.distribution.size();
        else if (e.distribution.size() != k)
            throw InputError("correlations: embeddings have different lengths");
        files_.push_back(e.file_id);
        standardized_.push_back(standardize(e.distribution));
    }
}

double TopicCorrelations::corr(std::size_t i, std::size_t j) const {
    const auto& a = standardized_.at(i);
    const auto& b = standardized_.at(j);
    double dot = 0.0;
    for (std::size_t x = 0; x < a.size(); ++x)
        dot += a[x] * b[x];
    return clamp_unit(dot);
}

double TopicCorrelations::corr_by_id(const std::string& a, const std::string& b) const {
    auto i = index_of(a);
    auto j = index_of(b);
    if (!i || !j)
        throw InputError("correlations: unknown file id");
    return corr(*i, *j);
}

std::optional<std::size_t> TopicCorrelations::index_of(const std::string& file) const {
    auto it = std::lower_bound(files_.begin(), files_.end(), file);
    if (it == files_.end() || *it != file)
        return std::nullopt;
    return static_cast<std::size_t>(it - files_.begin());
}

} // namespace archrec::textual
