#include "archrec/ingest/folder_scan.hpp"

#include <algorithm>
#include <map>

#include "archrec/core/error.hpp"

namespace archrec {
namespace {

std::string dirname_of(const std::string& relpath) {
    std::string normalized = relpath;
    std::replace(normalized.begin(), normalized.end(), '\\', '/');
    const auto slash = normalized.find_last_of('/');
    return slash == std::string::npos ? std::string() : normalized.substr(0, slash);
}

} // namespace

FolderTree scan_folders(const std::vector<std::pair<std::string, std::string>>& id_and_relpath) {
    // folder path -> directly contained file ids
    std::map<std::string, std::vector<std::string>> direct;
    direct[""];
    for (const auto& [id, relpath] : id_and_relpath) {
        if (relpath.empty() || relpath.front() == '/')
            throw InputError("scan_folders: file path must be relative: " + relpath);
        std::string dir = dirname_of(relpath);
        direct[dir].push_back(id);
        while (!dir.empty()) {  // materialize intermediate folders
            const auto slash = dir.find_last_of('/');
            dir = slash == std::string::npos ? std::string() : dir.substr(0, slash);
            direct[dir];
        }
    }

    FolderTree tree;
    std::map<std::string, std::size_t> index;
    for (auto& [path, files] : direct) {  // map order: root first, then by path
        std::sort(files.begin(), files.end());
        FolderNode node;
        node.path = path;
        node.files = std::move(files);
        index.emplace(path, tree.nodes.size());
        tree.nodes.push_back(std::move(node));
    }
    for (const auto& [path, i] : index) {
        if (path.empty())
            continue;
        tree.nodes[index.at(dirname_of(path))].children.push_back(i);
    }
    return tree;
}

FolderTree scan_folders(const DependencyGraph& g) {
    std::vector<std::pair<std::string, std::string>> files;
    for (const Entity& e : g.entities())
        if (e.kind == EntityKind::File)
            files.emplace_back(e.id, e.name);
    return scan_folders(files);
}

} // namespace archrec
