#include "archrec/folders/filter.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "archrec/core/error.hpp"

namespace archrec::folders {
namespace {

// subtree file sets never change during merging, so decisions are computed
// once per folder and applied structurally afterwards
struct FolderStats {
    double inner = 0.0;
    double inter = 0.0;
};

} // namespace

FolderTree filter_folders(const FolderTree& tree, const FileGraph& fg) {
    if (tree.empty())
        return tree;

    const std::size_t n = tree.nodes.size();
    std::vector<std::size_t> parent(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c : tree.nodes[i].children)
            parent[c] = i;

    std::unordered_map<std::string, std::size_t> folder_of_file;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& f : tree.nodes[i].files) {
            if (!fg.index_of(f))
                throw InputError("filter_folders: file missing from the file graph: " + f);
            folder_of_file.emplace(f, i);
        }
    }

    // ancestors of each folder, root included
    std::vector<std::vector<std::size_t>> ancestors(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cur = i;
        ancestors[i].push_back(cur);
        while (cur != 0) {
            cur = parent[cur];
            ancestors[i].push_back(cur);
        }
    }

    std::vector<FolderStats> stats(n);
    for (const auto& [key, w] : fg.edges()) {
        const auto u = folder_of_file.find(fg.node(key.first));
        const auto v = folder_of_file.find(fg.node(key.second));
        if (u == folder_of_file.end() || v == folder_of_file.end())
            continue;  // files outside the tree contribute nothing
        std::vector<bool> on_u(n, false);
        for (std::size_t a : ancestors[u->second])
            on_u[a] = true;
        // common ancestors hold the edge inside; the rest see it cross
        for (std::size_t a : ancestors[v->second]) {
            if (on_u[a]) {
                stats[a].inner += w;
                on_u[a] = false;
            } else {
                stats[a].inter += w;
            }
        }
        for (std::size_t a : ancestors[u->second])
            if (on_u[a])
                stats[a].inter += w;
    }

    // leaves upward: merged folders hand their files to the nearest kept
    // ancestor and their children splice up
    std::vector<bool> merged(n, false);
    for (std::size_t i = 1; i < n; ++i)
        merged[i] = stats[i].inter > stats[i].inner;

    std::vector<std::size_t> target(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cur = i;
        while (cur != 0 && merged[cur])
            cur = parent[cur];
        target[i] = cur;
    }

    FolderTree out;
    std::vector<std::size_t> new_index(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != 0 && merged[i])
            continue;
        new_index[i] = out.nodes.size();
        FolderNode node;
        node.path = tree.nodes[i].path;
        out.nodes.push_back(std::move(node));
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto& files = out.nodes[new_index[target[i]]].files;
        files.insert(files.end(), tree.nodes[i].files.begin(), tree.nodes[i].files.end());
    }
    for (auto& node : out.nodes)
        std::sort(node.files.begin(), node.files.end());
    for (std::size_t i = 1; i < n; ++i) {
        if (merged[i])
            continue;
        std::size_t up = parent[i];
        while (up != 0 && merged[up])
            up = parent[up];
        out.nodes[new_index[up]].children.push_back(new_index[i]);
    }
    return out;
}

Architecture folder_partition(const FolderTree& tree) {
    if (tree.empty())
        throw InputError("folder_partition: empty tree");
    std::map<std::string, std::set<std::string>> clusters;
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const FolderNode& node = tree.nodes[i];
        if (node.files.empty())
            continue;
        const std::string name = i == 0 ? std::string("ROOT") : node.path;
        clusters[name].insert(node.files.begin(), node.files.end());
    }
    return Architecture::from_clusters(std::move(clusters));
}

} // namespace archrec::folders
