#include "archrec/fusion/fusion.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "archrec/cluster/modularity.hpp"
#include "archrec/core/error.hpp"
#include "archrec/folders/filter.hpp"
#include "archrec/fusion/linkage.hpp"
#include "archrec/metrics/metrics.hpp"

namespace archrec::fusion {

Architecture recover_dep_only(const FileGraph& fg, double resolution) {
    return cluster::greedy_modularity(fg, resolution);
}

Architecture recover_text_only(const textual::TopicCorrelations& correlations, std::size_t k) {
    const auto& files = correlations.files();
    const std::size_t n = files.size();
    if (k > n)
        throw InputError("recover_text_only: more clusters requested than files");
    if (k < 1)
        throw InputError("recover_text_only: cluster count must be >= 1");

    auto merges = complete_linkage(
        n, [&](std::size_t i, std::size_t j) { return 1.0 - correlations.corr(i, j); });
    const auto labels = cut_dendrogram(n, std::move(merges), k);

    std::map<std::string, std::set<std::string>> clusters;
    for (std::size_t i = 0; i < n; ++i) {
        char name[16];
        std::snprintf(name, sizeof(name), "c%05zu", labels[i]);
        clusters[name].insert(files[i]);
    }
    return Architecture::from_clusters(std::move(clusters));
}

FusionWeights assign_weights(const Architecture& dep, const Architecture& text,
                             const Architecture& folder) {
    if (dep.universe() != text.universe() || dep.universe() != folder.universe())
        throw InputError("assign_weights: architectures cover different universes");
    FusionWeights w;
    w.text = metrics::a2a_adj(dep, text) / 100.0;
    w.folder = metrics::a2a_adj(dep, folder) / 100.0;
    return w;
}

FileGraph apply_text_coefficients(FileGraph fg, const textual::TopicCorrelations& correlations,
                                  double w_text, const FuseOptions& opts) {
    if (w_text == 0.0)
        return fg;
    if (w_text < 0.0 || w_text > 1.0)
        throw InputError("apply_text_coefficients: weight must be in [0, 1]");

    // index correlations by graph node order
    std::vector<std::size_t> corr_index(fg.node_count());
    for (std::size_t i = 0; i < fg.node_count(); ++i) {
        auto ci = correlations.index_of(fg.node(i));
        if (!ci)
            throw InputError("apply_text_coefficients: no embedding for file " + fg.node(i));
        corr_index[i] = *ci;
    }
    auto coef_t = [&](std::size_t u, std::size_t v) {
        const double corr = correlations.corr(corr_index[u], corr_index[v]);
        return std::max(opts.coef_floor, 1.0 + corr * w_text);
    };

    const double median = fg.median_positive_weight();

    for (const auto& [key, _] : fg.edges())
        fg.multiply_edge(key.first, key.second, coef_t(key.first, key.second));

    // strongly similar but structurally unconnected pairs get typical edges
    for (std::size_t u = 0; u < fg.node_count(); ++u) {
        for (std::size_t v = u + 1; v < fg.node_count(); ++v) {
            if (fg.has_edge(u, v) || fg.has_edge(v, u))
                continue;
            if (correlations.corr(corr_index[u], corr_index[v]) <= opts.corr_add_threshold)
                continue;
            const double w = median * coef_t(u, v);
            fg.set_edge(u, v, w);
            fg.set_edge(v, u, w);
        }
    }
    return fg;
}

FileGraph apply_folder_coefficients(FileGraph fg, const FolderTree& filtered_tree, double w_folder,
                                    const FuseOptions& opts) {
    if (w_folder < 0.0 || w_folder > 1.0)
        throw InputError("apply_folder_coefficients: weight must be in [0, 1]");
    const double clamped = std::min(w_folder, opts.max_folder_weight);
    const double coef_f = 1.0 / (1.0 - clamped);
    if (coef_f == 1.0)
        return fg;

    const Architecture partition = folders::folder_partition(filtered_tree);
    std::vector<const std::string*> cluster_of(fg.node_count(), nullptr);
    for (std::size_t i = 0; i < fg.node_count(); ++i)
        cluster_of[i] = partition.cluster_of(fg.node(i));

    std::vector<FileGraph::EdgeKey> shared;
    for (const auto& [key, _] : fg.edges()) {
        const auto* cu = cluster_of[key.first];
        const auto* cv = cluster_of[key.second];
        if (cu && cv && *cu == *cv)
            shared.push_back(key);
    }
    for (const auto& key : shared)
        fg.multiply_edge(key.first, key.second, coef_f);
    return fg;
}

FileGraph fuse(FileGraph fg, const textual::TopicCorrelations* correlations,
               const FolderTree* filtered_tree, const FusionWeights& weights,
               const FuseOptions& opts) {
    if (correlations)
        fg = apply_text_coefficients(std::move(fg), *correlations, weights.text, opts);
    if (filtered_tree)
        fg = apply_folder_coefficients(std::move(fg), *filtered_tree, weights.folder, opts);
    return fg;
}

} // namespace archrec::fusion
