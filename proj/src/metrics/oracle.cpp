#include "archrec/metrics/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "archrec/core/error.hpp"

namespace archrec::metrics {
namespace {

using IndexPartition = std::vector<std::vector<int>>;

IndexPartition canonical(IndexPartition p) {
    for (auto& c : p)
        std::sort(c.begin(), c.end());
    std::sort(p.begin(), p.end());
    return p;
}

std::string encode(const IndexPartition& p) {
    std::string key;
    for (const auto& c : p) {
        for (int x : c)
            key.push_back(static_cast<char>('a' + x));
        key.push_back('|');
    }
    return key;
}

IndexPartition to_index_partition(const Architecture& arch, const std::vector<std::string>& order) {
    std::map<std::string, int> pos;
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = static_cast<int>(i);
    IndexPartition p;
    for (const auto& [_, files] : arch.clusters()) {
        std::vector<int> c;
        for (const auto& f : files)
            c.push_back(pos.at(f));
        p.push_back(std::move(c));
    }
    return canonical(p);
}

// Every partition reachable with one move or one join.
std::vector<IndexPartition> neighbors(const IndexPartition& p) {
    std::vector<IndexPartition> out;
    const std::size_t c = p.size();

    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = i + 1; j < c; ++j) {
            IndexPartition q;
            for (std::size_t k = 0; k < c; ++k)
                if (k != i && k != j)
                    q.push_back(p[k]);
            std::vector<int> merged = p[i];
            merged.insert(merged.end(), p[j].begin(), p[j].end());
            q.push_back(std::move(merged));
            out.push_back(canonical(q));
        }
    }

    for (std::size_t i = 0; i < c; ++i) {
        for (int x : p[i]) {
            // to another existing cluster
            for (std::size_t j = 0; j < c; ++j) {
                if (j == i)
                    continue;
                IndexPartition q = p;
                q[i].erase(std::find(q[i].begin(), q[i].end(), x));
                q[j].push_back(x);
                if (q[i].empty())
                    q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
                out.push_back(canonical(q));
            }
            // to a fresh singleton
            if (p[i].size() > 1) {
                IndexPartition q = p;
                q[i].erase(std::find(q[i].begin(), q[i].end(), x));
                q.push_back({x});
                out.push_back(canonical(q));
            }
        }
    }
    return out;
}

} // namespace

std::int64_t oracle_mojo(const Architecture& a, const Architecture& b) {
    if (a.universe() != b.universe())
        throw InputError("oracle_mojo: architectures partition different universes");
    if (a.universe().size() > kOracleMaxUniverse)
        throw InputError("oracle limited to small instances");

    std::vector<std::string> order(a.universe().begin(), a.universe().end());
    const IndexPartition start = to_index_partition(a, order);
    const std::string goal = encode(to_index_partition(b, order));

    std::unordered_map<std::string, std::int64_t> dist;
    std::deque<IndexPartition> queue;
    dist[encode(start)] = 0;
    queue.push_back(start);
    if (encode(start) == goal)
        return 0;

    while (!queue.empty()) {
        IndexPartition cur = std::move(queue.front());
        queue.pop_front();
        const std::int64_t d = dist.at(encode(cur));
        for (auto& next : neighbors(cur)) {
            std::string key = encode(next);
            if (dist.count(key))
                continue;
            if (key == goal)
                return d + 1;
            dist.emplace(std::move(key), d + 1);
            queue.push_back(std::move(next));
        }
    }
    throw PipelineError("oracle_mojo: target partition unreachable");
}

namespace {

// Best total overlap over injective assignments of the rows to the columns.
std::int64_t best_assignment(const std::vector<std::vector<std::int64_t>>& ov, std::size_t row,
                             std::vector<bool>& used) {
    if (row == ov.size())
        return 0;
    // leaving this row unassigned is always an option
    std::int64_t best = best_assignment(ov, row + 1, used);
    for (std::size_t j = 0; j < ov[row].size(); ++j) {
        if (used[j])
            continue;
        used[j] = true;
        best = std::max(best, ov[row][j] + best_assignment(ov, row + 1, used));
        used[j] = false;
    }
    return best;
}

} // namespace

std::int64_t oracle_moves(const Architecture& a, const Architecture& b) {
    std::set<std::string> shared;
    std::set_intersection(a.universe().begin(), a.universe().end(), b.universe().begin(),
                          b.universe().end(), std::inserter(shared, shared.end()));
    if (shared.size() > kOracleMaxUniverse)
        throw InputError("oracle limited to small instances");
    if (shared.empty())
        return 0;

    std::vector<std::set<std::string>> ca, cb;
    for (const auto& [_, files] : a.clusters()) {
        std::set<std::string> kept;
        std::set_intersection(files.begin(), files.end(), shared.begin(), shared.end(),
                              std::inserter(kept, kept.end()));
        if (!kept.empty())
            ca.push_back(std::move(kept));
    }
    for (const auto& [_, files] : b.clusters()) {
        std::set<std::string> kept;
        std::set_intersection(files.begin(), files.end(), shared.begin(), shared.end(),
                              std::inserter(kept, kept.end()));
        if (!kept.empty())
            cb.push_back(std::move(kept));
    }

    std::vector<std::vector<std::int64_t>> ov(ca.size(), std::vector<std::int64_t>(cb.size(), 0));
    for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t j = 0; j < cb.size(); ++j) {
            std::int64_t n = 0;
            for (const auto& f : ca[i])
                n += cb[j].count(f) ? 1 : 0;
            ov[i][j] = n;
        }
    }
    std::vector<bool> used(cb.size(), false);
    return static_cast<std::int64_t>(shared.size()) - best_assignment(ov, 0, used);
}

std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
    std::vector<IndexPartition> out;
    IndexPartition current;

    // element i goes into an existing cluster or opens a new one
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(canonical(current));
            return;
        }
        const std::size_t open = current.size();  // recursion grows the vector
        for (std::size_t c = 0; c < open; ++c) {
            current[c].push_back(i);
            self(self, i + 1);
            current[c].pop_back();
        }
        current.push_back({i});
        self(self, i + 1);
        current.pop_back();
    };
    if (n > 0)
        rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Architecture architecture_from_index_partition(const std::vector<std::vector<int>>& partition,
                                               const std::vector<std::string>& elements) {
    std::map<std::string, std::set<std::string>> clusters;
    int idx = 0;
    for (const auto& c : partition) {
        std::set<std::string> files;
        for (int x : c)
            files.insert(elements.at(static_cast<std::size_t>(x)));
        char name[16];
        std::snprintf(name, sizeof(name), "c%05d", idx++);
        clusters.emplace(name, std::move(files));
    }
    return Architecture::from_clusters(std::move(clusters));
}

} // namespace archrec::metrics
