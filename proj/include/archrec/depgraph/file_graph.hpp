#ifndef ARCHREC_DEPGRAPH_FILE_GRAPH_HPP
#define ARCHREC_DEPGRAPH_FILE_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace archrec {

// Directed weighted graph over file ids. No self-loops, weights finite and
// non-negative. The node set is fixed at construction; edges accumulate.
class FileGraph {
public:
    using EdgeKey = std::pair<std::size_t, std::size_t>;

    FileGraph() = default;
    explicit FileGraph(std::vector<std::string> nodes);

    std::size_t node_count() const { return nodes_.size(); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    std::optional<std::size_t> index_of(const std::string& id) const;
    const std::string& node(std::size_t i) const { return nodes_[i]; }

    // Accumulates weight onto the directed edge src -> dst.
    void add_edge(const std::string& src, const std::string& dst, double weight);
    void add_edge(std::size_t src, std::size_t dst, double weight);

    void set_edge(std::size_t src, std::size_t dst, double weight);
    void multiply_edge(std::size_t src, std::size_t dst, double factor);

    double edge(std::size_t src, std::size_t dst) const;  // 0 when absent
    bool has_edge(std::size_t src, std::size_t dst) const;

    const std::map<EdgeKey, double>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    double total_weight() const;

    // Median of the positive edge weights; 1.0 for a graph without any.
    double median_positive_weight() const;

    bool operator==(const FileGraph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> nodes_;  // sorted, unique
    std::unordered_map<std::string, std::size_t> index_;
    std::map<EdgeKey, double> edges_;

    void check_edge(std::size_t src, std::size_t dst, double weight) const;
};

} // namespace archrec

#endif
