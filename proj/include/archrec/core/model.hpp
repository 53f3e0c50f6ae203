#ifndef ARCHREC_CORE_MODEL_HPP
#define ARCHREC_CORE_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace archrec {

enum class EntityKind { File, Class, Function, Variable, Other };

const char* to_string(EntityKind kind);
std::optional<EntityKind> entity_kind_from_string(std::string_view s);

// The 13 dependency type names. MixIn is carried for completeness but does
// not occur in C/C++/Java extractor output.
extern const std::vector<std::string> kDependencyTypes;

bool is_known_dep_type(std::string_view name);

// A node of the dependency graph: file, class, function, variable or other.
// Files are entities themselves (kind File, file_id == id), so importance
// lookups are uniform across granularities.
struct Entity {
    std::string id;
    EntityKind kind = EntityKind::Other;
    std::string name;
    std::string file_id;                    // containing file; self for File kind
    std::optional<std::string> parent_id;   // enclosing entity, if any
    std::optional<double> importance;       // set by the importance pass
};

// Typed, counted relation between two entities.
struct DependencyEdge {
    std::string src;
    std::string dst;
    std::string dep_type;                   // one of kDependencyTypes
    std::int64_t multiplicity = 1;
    std::optional<double> weight;           // set by the weighting pass
};

// Directed multigraph of entities and typed dependencies.
class DependencyGraph {
public:
    DependencyGraph() = default;

    void add_entity(Entity e);
    void add_edge(DependencyEdge e);

    const std::vector<Entity>& entities() const { return entities_; }
    const std::vector<DependencyEdge>& edges() const { return edges_; }
    std::vector<Entity>& mutable_entities() { return entities_; }
    std::vector<DependencyEdge>& mutable_edges() { return edges_; }

    // nullptr when the id is unknown.
    const Entity* find_entity(std::string_view id) const;

    bool empty() const { return entities_.empty(); }

private:
    std::vector<Entity> entities_;
    std::vector<DependencyEdge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Diagnostic check of every structural invariant: unique ids, parent chains
// ending at a File without cycles, resolvable edge endpoints, multiplicity,
// known dependency types, non-negative importances. Empty result == valid.
std::vector<std::string> validate_graph(const DependencyGraph& g);

// A total partition of file ids into named, non-empty, disjoint clusters.
// Files that no pass assigned anywhere go into the reserved "UNASSIGNED"
// cluster instead of being dropped.
class Architecture {
public:
    static constexpr const char* kUnassigned = "UNASSIGNED";

    Architecture() = default;

    // Validates disjointness and non-emptiness; throws InputError otherwise.
    static Architecture from_clusters(std::map<std::string, std::set<std::string>> clusters);

    const std::map<std::string, std::set<std::string>>& clusters() const { return clusters_; }
    const std::set<std::string>& universe() const { return universe_; }
    std::size_t cluster_count() const { return clusters_.size(); }

    // Cluster name owning the given file, or nullptr.
    const std::string* cluster_of(const std::string& file_id) const;

    // Restriction to a subset of the universe; empty clusters drop out.
    Architecture restricted_to(const std::set<std::string>& files) const;

    bool operator==(const Architecture& other) const { return clusters_ == other.clusters_; }

private:
    std::map<std::string, std::set<std::string>> clusters_;
    std::set<std::string> universe_;
    std::unordered_map<std::string, std::string> owner_;
};

// Per-dependency-type edge weights. Kept inside the optimizer's search box.
class TypeWeights {
public:
    static constexpr double kMinWeight = 0.1;
    static constexpr double kMaxWeight = 10.0;

    // The shipped defaults used when no optimization corpus is available.
    static TypeWeights defaults();

    // Uniform weights (1.0) for the weighting-ablation mode.
    static TypeWeights uniform();

    // Validates the box constraint and 13-name coverage.
    static TypeWeights from_map(std::map<std::string, double> weights);

    double weight_for(std::string_view dep_type) const;  // throws on unknown type
    const std::map<std::string, double>& values() const { return weights_; }

private:
    std::map<std::string, double> weights_;
};

// Directory hierarchy over the files. nodes[0] is always the root.
struct FolderNode {
    std::string path;                    // "" for root, "a/b" otherwise
    std::vector<std::size_t> children;   // indices into FolderTree::nodes
    std::vector<std::string> files;      // ids of files directly in this folder
};

struct FolderTree {
    std::vector<FolderNode> nodes;

    bool empty() const { return nodes.empty(); }
    const FolderNode& root() const { return nodes.front(); }
    std::vector<std::string> all_files() const;
};

enum class SourceKind { Filename, Definition, Comment };

const char* to_string(SourceKind kind);

// One normalized word observed in one file, attributed to the source kind
// it came from and (for definitions) the defining entity.
struct WordOccurrence {
    std::string file_id;
    std::optional<std::string> entity_id;
    SourceKind source_kind = SourceKind::Comment;
    std::string word;
    std::int64_t count = 1;
    double weight = 0.0;
};

// Per-file topic distribution; entries sum to one.
struct TopicEmbedding {
    std::string file_id;
    std::vector<double> distribution;
};

} // namespace archrec

#endif
