#include "archrec/depgraph/file_graph.hpp"

#include <algorithm>
#include <cmath>

#include "archrec/core/error.hpp"

namespace archrec {

FileGraph::FileGraph(std::vector<std::string> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    nodes_ = std::move(nodes);
    index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        index_.emplace(nodes_[i], i);
}

std::optional<std::size_t> FileGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

void FileGraph::check_edge(std::size_t src, std::size_t dst, double weight) const {
    if (src >= nodes_.size() || dst >= nodes_.size())
        throw PipelineError("file graph edge references unknown node");
    if (src == dst)
        throw PipelineError("file graph does not hold self-loops: " + nodes_[src]);
    if (!std::isfinite(weight) || weight < 0.0)
        throw PipelineError("file graph edge weight must be finite and >= 0");
}

void FileGraph::add_edge(const std::string& src, const std::string& dst, double weight) {
    auto s = index_of(src);
    auto d = index_of(dst);
    if (!s || !d)
        throw PipelineError("file graph edge references unknown node: " + (s ? dst : src));
    add_edge(*s, *d, weight);
}

void FileGraph::add_edge(std::size_t src, std::size_t dst, double weight) {
    check_edge(src, dst, weight);
    edges_[{src, dst}] += weight;
}

void FileGraph::set_edge(std::size_t src, std::size_t dst, double weight) {
    check_edge(src, dst, weight);
    edges_[{src, dst}] = weight;
}

void FileGraph::multiply_edge(std::size_t src, std::size_t dst, double factor) {
    auto it = edges_.find({src, dst});
    if (it == edges_.end())
        throw PipelineError("file graph edge to scale does not exist");
    const double w = it->second * factor;
    if (!std::isfinite(w) || w < 0.0)
        throw PipelineError("file graph edge weight must stay finite and >= 0");
    it->second = w;
}

double FileGraph::edge(std::size_t src, std::size_t dst) const {
    auto it = edges_.find({src, dst});
    return it == edges_.end() ? 0.0 : it->second;
}

bool FileGraph::has_edge(std::size_t src, std::size_t dst) const {
    return edges_.count({src, dst}) > 0;
}

double FileGraph::total_weight() const {
    double total = 0.0;
    for (const auto& [_, w] : edges_)
        total += w;
    return total;
}

double FileGraph::median_positive_weight() const {
    std::vector<double> positive;
    positive.reserve(edges_.size());
    for (const auto& [_, w] : edges_)
        if (w > 0.0)
            positive.push_back(w);
    if (positive.empty())
        return 1.0;
    std::sort(positive.begin(), positive.end());
    const std::size_t n = positive.size();
    if (n % 2 == 1)
        return positive[n / 2];
    return 0.5 * (positive[n / 2 - 1] + positive[n / 2]);
}

} // namespace archrec
