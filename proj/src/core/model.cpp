#include "archrec/core/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "archrec/core/error.hpp"

namespace archrec {

const std::vector<std::string> kDependencyTypes = {
    "Implement", "Throw", "Call", "Create", "ImplLink", "Extend", "Use",
    "Parameter", "Import", "Cast", "Return", "Contain", "MixIn",
};

bool is_known_dep_type(std::string_view name) {
    return std::find(kDependencyTypes.begin(), kDependencyTypes.end(), name) !=
           kDependencyTypes.end();
}

const char* to_string(EntityKind kind) {
    switch (kind) {
    case EntityKind::File: return "File";
    case EntityKind::Class: return "Class";
    case EntityKind::Function: return "Function";
    case EntityKind::Variable: return "Variable";
    case EntityKind::Other: return "Other";
    }
    return "Other";
}

std::optional<EntityKind> entity_kind_from_string(std::string_view s) {
    if (s == "File") return EntityKind::File;
    if (s == "Class") return EntityKind::Class;
    if (s == "Function") return EntityKind::Function;
    if (s == "Variable") return EntityKind::Variable;
    if (s == "Other") return EntityKind::Other;
    return std::nullopt;
}

const char* to_string(SourceKind kind) {
    switch (kind) {
    case SourceKind::Filename: return "Filename";
    case SourceKind::Definition: return "Definition";
    case SourceKind::Comment: return "Comment";
    }
    return "Comment";
}

void DependencyGraph::add_entity(Entity e) {
    index_.emplace(e.id, entities_.size());
    entities_.push_back(std::move(e));
}

void DependencyGraph::add_edge(DependencyEdge e) {
    edges_.push_back(std::move(e));
}

const Entity* DependencyGraph::find_entity(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        return nullptr;
    return &entities_[it->second];
}

std::vector<std::string> validate_graph(const DependencyGraph& g) {
    std::vector<std::string> violations;
    std::unordered_set<std::string> ids;

    for (const Entity& e : g.entities()) {
        if (!ids.insert(e.id).second)
            violations.push_back("duplicate entity id: " + e.id);
        if (e.importance && *e.importance < 0)
            violations.push_back("negative importance on entity: " + e.id);
    }

    for (const Entity& e : g.entities()) {
        if (!ids.count(e.file_id)) {
            violations.push_back("entity " + e.id + " has unresolvable file_id: " + e.file_id);
            continue;
        }
        const Entity* file = g.find_entity(e.file_id);
        if (file && file->kind != EntityKind::File)
            violations.push_back("entity " + e.id + " file_id does not name a File entity");

        // Parent chains must terminate at a File entity without cycling.
        std::unordered_set<std::string> seen{e.id};
        const Entity* cur = &e;
        while (cur->parent_id) {
            const Entity* parent = g.find_entity(*cur->parent_id);
            if (!parent) {
                violations.push_back("entity " + e.id + " has dangling parent: " + *cur->parent_id);
                break;
            }
            if (!seen.insert(parent->id).second) {
                violations.push_back("parent cycle through entity: " + e.id);
                break;
            }
            cur = parent;
        }
        if (!cur->parent_id && cur != &e && cur->kind != EntityKind::File)
            violations.push_back("parent chain of " + e.id + " ends at non-File entity " + cur->id);
    }

    for (const DependencyEdge& e : g.edges()) {
        if (!ids.count(e.src))
            violations.push_back("dangling endpoint: edge src " + e.src);
        if (!ids.count(e.dst))
            violations.push_back("dangling endpoint: edge dst " + e.dst);
        if (e.multiplicity < 1)
            violations.push_back("edge " + e.src + " -> " + e.dst + " has multiplicity < 1");
        if (!is_known_dep_type(e.dep_type))
            violations.push_back("unknown dependency type: " + e.dep_type);
        if (e.weight && *e.weight < 0)
            violations.push_back("negative weight on edge " + e.src + " -> " + e.dst);
    }

    return violations;
}

Architecture Architecture::from_clusters(std::map<std::string, std::set<std::string>> clusters) {
    Architecture arch;
    for (auto& [name, files] : clusters) {
        if (files.empty())
            throw InputError("empty cluster: " + name);
        for (const auto& f : files) {
            if (!arch.universe_.insert(f).second)
                throw InputError("file in more than one cluster: " + f);
            arch.owner_.emplace(f, name);
        }
    }
    arch.clusters_ = std::move(clusters);
    return arch;
}

const std::string* Architecture::cluster_of(const std::string& file_id) const {
    auto it = owner_.find(file_id);
    if (it == owner_.end())
        return nullptr;
    return &it->second;
}

Architecture Architecture::restricted_to(const std::set<std::string>& files) const {
    std::map<std::string, std::set<std::string>> kept;
    for (const auto& [name, members] : clusters_) {
        std::set<std::string> inter;
        std::set_intersection(members.begin(), members.end(), files.begin(), files.end(),
                              std::inserter(inter, inter.end()));
        if (!inter.empty())
            kept.emplace(name, std::move(inter));
    }
    return from_clusters(std::move(kept));
}

TypeWeights TypeWeights::defaults() {
    // MixIn never fires on C/C++/Java input; carried as neutral 1.0.
    return from_map({
        {"Implement", 7.575}, {"Throw", 9.053}, {"Call", 0.177}, {"Create", 1.665},
        {"ImplLink", 9.33},   {"Extend", 2.159}, {"Use", 0.509},  {"Parameter", 5.146},
        {"Import", 8.300},    {"Cast", 0.701},   {"Return", 5.702}, {"Contain", 4.478},
        {"MixIn", 1.0},
    });
}

TypeWeights TypeWeights::uniform() {
    std::map<std::string, double> w;
    for (const auto& t : kDependencyTypes)
        w[t] = 1.0;
    return from_map(std::move(w));
}

TypeWeights TypeWeights::from_map(std::map<std::string, double> weights) {
    for (const auto& name : kDependencyTypes) {
        auto it = weights.find(name);
        if (it == weights.end())
            throw InputError("type weights missing dependency type: " + name);
        if (it->second < kMinWeight || it->second > kMaxWeight)
            throw InputError("type weight out of [0.1, 10] range: " + name);
    }
    for (const auto& [name, _] : weights) {
        if (!is_known_dep_type(name))
            throw InputError("type weights name unknown dependency type: " + name);
    }
    TypeWeights tw;
    tw.weights_ = std::move(weights);
    return tw;
}

double TypeWeights::weight_for(std::string_view dep_type) const {
    auto it = weights_.find(std::string(dep_type));
    if (it == weights_.end())
        throw PipelineError("no weight for dependency type: " + std::string(dep_type));
    return it->second;
}

std::vector<std::string> FolderTree::all_files() const {
    std::vector<std::string> out;
    for (const auto& node : nodes)
        out.insert(out.end(), node.files.begin(), node.files.end());
    return out;
}

} // namespace archrec
