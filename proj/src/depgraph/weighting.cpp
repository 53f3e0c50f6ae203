#include "archrec/depgraph/weighting.hpp"

#include "archrec/core/error.hpp"

namespace archrec {

DependencyGraph weigh_edges(DependencyGraph g, const TypeWeights& tw) {
    for (DependencyEdge& e : g.mutable_edges()) {
        const Entity* src = g.find_entity(e.src);
        const Entity* dst = g.find_entity(e.dst);
        if (!src || !dst)
            throw PipelineError("weigh_edges: edge endpoint missing: " + e.src + " -> " + e.dst);
        if (!src->importance || !dst->importance)
            throw PipelineError("weigh_edges: endpoint importance unset on " + e.src + " -> " + e.dst);
        e.weight = static_cast<double>(e.multiplicity) * tw.weight_for(e.dep_type) *
                   (*src->importance + *dst->importance) / 2.0;
    }
    return g;
}

FileGraph aggregate_to_files(const DependencyGraph& g) {
    std::vector<std::string> files;
    for (const Entity& e : g.entities())
        if (e.kind == EntityKind::File)
            files.push_back(e.id);
    FileGraph fg(std::move(files));

    for (const DependencyEdge& e : g.edges()) {
        if (!e.weight)
            throw PipelineError("aggregate_to_files: edge weight unset on " + e.src + " -> " + e.dst);
        const Entity* src = g.find_entity(e.src);
        const Entity* dst = g.find_entity(e.dst);
        if (!src || !dst)
            throw PipelineError("aggregate_to_files: edge endpoint missing");
        if (src->file_id == dst->file_id)
            continue;
        auto s = fg.index_of(src->file_id);
        auto d = fg.index_of(dst->file_id);
        if (!s || !d)
            throw PipelineError("aggregate_to_files: containing file is not a File entity");
        fg.add_edge(*s, *d, *e.weight);
    }
    return fg;
}

} // namespace archrec
