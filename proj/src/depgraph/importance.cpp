#include "archrec/depgraph/importance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "archrec/core/error.hpp"

namespace archrec {

DependencyGraph function_subgraph(const DependencyGraph& g) {
    DependencyGraph sub;
    std::unordered_set<std::string> functions;
    for (const Entity& e : g.entities()) {
        if (e.kind == EntityKind::Function) {
            functions.insert(e.id);
            sub.add_entity(e);
        }
    }
    for (const DependencyEdge& e : g.edges()) {
        if (functions.count(e.src) && functions.count(e.dst))
            sub.add_edge(e);
    }
    return sub;
}

std::map<std::string, double> inverse_pagerank(const DependencyGraph& g, double damping,
                                               double tol, int max_iter) {
    const std::size_t n = g.entities().size();
    if (n == 0)
        throw PipelineError("no functions to rank");

    std::unordered_map<std::string, std::size_t> index;
    index.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(g.entities()[i].id, i);

    // Distinct successor lists and in-degrees over the collapsed simple graph.
    std::vector<std::set<std::size_t>> successors(n);
    for (const DependencyEdge& e : g.edges()) {
        auto s = index.find(e.src);
        auto d = index.find(e.dst);
        if (s == index.end() || d == index.end())
            throw PipelineError("inverse_pagerank: edge endpoint outside graph");
        successors[s->second].insert(d->second);
    }
    std::vector<std::size_t> in_degree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : successors[i])
            ++in_degree[j];

    const double base = (1.0 - damping) / static_cast<double>(n);
    std::vector<double> score(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j : successors[i])
                acc += score[j] / static_cast<double>(in_degree[j]);
            next[i] = damping * acc + base;
            max_change = std::max(max_change, std::fabs(next[i] - score[i]));
        }
        score.swap(next);
        if (max_change < tol)
            break;
    }

    std::map<std::string, double> out;
    for (std::size_t i = 0; i < n; ++i)
        out.emplace(g.entities()[i].id, score[i]);
    return out;
}

namespace {

// Effective parent for importance purposes: the declared parent when set,
// the containing file otherwise.
const std::string& effective_parent(const Entity& e) {
    return e.parent_id ? *e.parent_id : e.file_id;
}

} // namespace

DependencyGraph propagate_importance(DependencyGraph g,
                                     const std::map<std::string, double>& fn_scores) {
    auto& entities = g.mutable_entities();
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(entities.size());
    for (std::size_t i = 0; i < entities.size(); ++i)
        index.emplace(entities[i].id, i);

    // Functions carry their own score.
    for (Entity& e : entities) {
        if (e.kind != EntityKind::Function)
            continue;
        auto it = fn_scores.find(e.id);
        if (it == fn_scores.end())
            throw PipelineError("no importance score for function " + e.id);
        e.importance = it->second;
    }

    // Files sum every function they house; classes sum the functions found
    // anywhere below them in the parent chain.
    std::unordered_map<std::string, double> file_sum;
    std::unordered_map<std::string, double> class_sum;
    for (const Entity& e : entities) {
        if (e.kind != EntityKind::Function)
            continue;
        file_sum[e.file_id] += *e.importance;
        const Entity* cur = &e;
        while (cur->parent_id) {
            auto pit = index.find(*cur->parent_id);
            if (pit == index.end())
                break;
            const Entity& parent = entities[pit->second];
            if (parent.kind == EntityKind::Class)
                class_sum[parent.id] += *e.importance;
            cur = &parent;
        }
    }
    for (Entity& e : entities) {
        if (e.kind == EntityKind::File)
            e.importance = file_sum.count(e.id) ? file_sum[e.id] : 0.0;
        else if (e.kind == EntityKind::Class)
            e.importance = class_sum.count(e.id) ? class_sum[e.id] : 0.0;
    }

    // Lower-level entities split the parent's mass among its non-function
    // children. Parents first: order by parent-chain depth.
    std::unordered_map<std::string, std::size_t> nonfn_children;
    for (const Entity& e : entities) {
        if (e.kind == EntityKind::Variable || e.kind == EntityKind::Other)
            ++nonfn_children[effective_parent(e)];
    }
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < entities.size(); ++i) {
        if (entities[i].kind == EntityKind::Variable || entities[i].kind == EntityKind::Other)
            pending.push_back(i);
    }
    auto chain_depth = [&](std::size_t i) {
        std::size_t depth = 0;
        const Entity* cur = &entities[i];
        std::unordered_set<std::string> seen;
        while (cur->parent_id && seen.insert(cur->id).second) {
            auto it = index.find(*cur->parent_id);
            if (it == index.end())
                break;
            cur = &entities[it->second];
            ++depth;
        }
        return depth;
    };
    std::stable_sort(pending.begin(), pending.end(),
                     [&](std::size_t a, std::size_t b) { return chain_depth(a) < chain_depth(b); });

    for (std::size_t i : pending) {
        Entity& e = entities[i];
        auto pit = index.find(effective_parent(e));
        if (pit == index.end())
            throw PipelineError("entity " + e.id + " has unresolvable parent");
        const Entity& parent = entities[pit->second];
        if (!parent.importance)
            throw PipelineError("parent of " + e.id + " has no importance yet");
        const double share = static_cast<double>(nonfn_children.at(effective_parent(e)));
        e.importance = *parent.importance / share;
    }

    return g;
}

DependencyGraph uniform_importance(DependencyGraph g, double value) {
    for (Entity& e : g.mutable_entities())
        e.importance = value;
    return g;
}

} // namespace archrec
