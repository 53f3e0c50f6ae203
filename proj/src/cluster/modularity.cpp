#include "archrec/cluster/modularity.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <queue>
#include <vector>

#include "archrec/core/error.hpp"

namespace archrec::cluster {

double modularity(const FileGraph& fg, const Architecture& partition, double gamma) {
    const std::size_t n = fg.node_count();
    std::vector<int> community(n, -1);
    std::map<std::string, int> community_ids;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string* name = partition.cluster_of(fg.node(i));
        if (!name)
            throw InputError("modularity: partition does not cover node " + fg.node(i));
        auto [it, _] = community_ids.emplace(*name, static_cast<int>(community_ids.size()));
        community[i] = it->second;
    }

    const double total = fg.total_weight();
    if (total <= 0.0)
        throw PipelineError("empty graph has no modularity");
    const double two_m = 2.0 * total;

    std::vector<double> degree(n, 0.0);  // symmetrized weighted degree
    std::vector<double> intra(community_ids.size(), 0.0);
    for (const auto& [key, w] : fg.edges()) {
        degree[key.first] += w;
        degree[key.second] += w;
        if (community[key.first] == community[key.second])
            intra[static_cast<std::size_t>(community[key.first])] += w;
    }
    std::vector<double> degree_sum(community_ids.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
        degree_sum[static_cast<std::size_t>(community[i])] += degree[i];

    double q = 0.0;
    for (std::size_t c = 0; c < community_ids.size(); ++c) {
        q += 2.0 * intra[c] / two_m;
        q -= gamma * (degree_sum[c] / two_m) * (degree_sum[c] / two_m);
    }
    return q;
}

namespace {

struct MergeCandidate {
    double gain;
    std::size_t a;
    std::size_t b;
};

// Max-heap on gain; equal gains pop the lexicographically smallest pair.
struct CandidateOrder {
    bool operator()(const MergeCandidate& x, const MergeCandidate& y) const {
        if (x.gain != y.gain)
            return x.gain < y.gain;
        if (x.a != y.a)
            return x.a > y.a;
        return x.b > y.b;
    }
};

} // namespace

Architecture greedy_modularity(const FileGraph& fg, double gamma, std::uint64_t /*seed*/) {
    const std::size_t n = fg.node_count();
    if (n == 0)
        throw InputError("greedy_modularity: empty graph");

    // Symmetrized cross weights between communities. A community is named by
    // its smallest member's node index; nodes are sorted, so pair comparisons
    // match lexicographic file-id order.
    std::vector<std::map<std::size_t, double>> cross(n);
    std::vector<double> degree_sum(n, 0.0);
    for (const auto& [key, w] : fg.edges()) {
        const auto [u, v] = key;
        cross[u][v] += w;
        cross[v][u] += w;
        degree_sum[u] += w;
        degree_sum[v] += w;
    }
    const double two_m = 2.0 * fg.total_weight();

    std::vector<bool> alive(n, true);
    std::vector<std::vector<std::size_t>> members(n);
    for (std::size_t i = 0; i < n; ++i)
        members[i] = {i};

    if (two_m > 0.0) {
        auto gain_of = [&](std::size_t a, std::size_t b, double w_ab) {
            return 2.0 * w_ab / two_m - 2.0 * gamma * degree_sum[a] * degree_sum[b] / (two_m * two_m);
        };

        std::priority_queue<MergeCandidate, std::vector<MergeCandidate>, CandidateOrder> heap;
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& [b, w] : cross[a])
                if (a < b)
                    heap.push({gain_of(a, b, w), a, b});

        while (!heap.empty()) {
            const MergeCandidate top = heap.top();
            heap.pop();
            if (!alive[top.a] || !alive[top.b])
                continue;
            auto it = cross[top.a].find(top.b);
            if (it == cross[top.a].end())
                continue;
            const double current = gain_of(top.a, top.b, it->second);
            if (current != top.gain)
                continue;  // stale; a fresh entry was pushed when the pair changed
            if (current <= 0.0)
                break;

            // merge b into a; a < b keeps the representative minimal
            const std::size_t a = top.a, b = top.b;
            alive[b] = false;
            degree_sum[a] += degree_sum[b];
            members[a].insert(members[a].end(), members[b].begin(), members[b].end());
            members[b].clear();
            cross[a].erase(b);
            for (const auto& [x, w] : cross[b]) {
                if (x == a)
                    continue;
                cross[x].erase(b);
                cross[a][x] += w;
                cross[x][a] = cross[a][x];
            }
            cross[b].clear();
            for (const auto& [x, w] : cross[a]) {
                const std::size_t lo = std::min(a, x), hi = std::max(a, x);
                heap.push({gain_of(lo, hi, w), lo, hi});
            }
        }
    }

    std::map<std::string, std::set<std::string>> clusters;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {  // representatives ascend with member order
        if (!alive[i])
            continue;
        std::set<std::string> files;
        for (std::size_t m : members[i])
            files.insert(fg.node(m));
        char name[16];
        std::snprintf(name, sizeof(name), "c%05zu", next++);
        clusters.emplace(name, std::move(files));
    }
    return Architecture::from_clusters(std::move(clusters));
}

} // namespace archrec::cluster
