#ifndef ARCHREC_TESTS_HELPERS_HPP
#define ARCHREC_TESTS_HELPERS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "archrec/core/model.hpp"

namespace testutil {

// Architecture from an initializer-friendly cluster list; names generated.
inline archrec::Architecture arch(const std::vector<std::set<std::string>>& clusters) {
    std::map<std::string, std::set<std::string>> named;
    int i = 0;
    for (const auto& c : clusters)
        named.emplace("k" + std::to_string(i++), c);
    return archrec::Architecture::from_clusters(std::move(named));
}

// Same, with integer elements "e0", "e1", ...
inline archrec::Architecture arch_int(const std::vector<std::vector<int>>& clusters) {
    std::vector<std::set<std::string>> named;
    for (const auto& c : clusters) {
        std::set<std::string> files;
        for (int x : c)
            files.insert("e" + std::to_string(x));
        named.push_back(std::move(files));
    }
    return arch(named);
}

inline archrec::Entity entity(std::string id, archrec::EntityKind kind, std::string file,
                              std::optional<std::string> parent = std::nullopt) {
    archrec::Entity e;
    e.id = id;
    e.kind = kind;
    e.name = id;
    e.file_id = std::move(file);
    e.parent_id = std::move(parent);
    return e;
}

inline archrec::DependencyEdge edge(std::string src, std::string dst, std::string type,
                                    std::int64_t count = 1) {
    archrec::DependencyEdge e;
    e.src = std::move(src);
    e.dst = std::move(dst);
    e.dep_type = std::move(type);
    e.multiplicity = count;
    return e;
}

} // namespace testutil

#endif
