#include "archrec/depgraph/optimize.hpp"

#include <algorithm>
#include <random>

#include "archrec/cluster/modularity.hpp"
#include "archrec/core/error.hpp"
#include "archrec/depgraph/importance.hpp"
#include "archrec/depgraph/weighting.hpp"

namespace archrec {
namespace {

constexpr double kConvergenceLoss = 1e-5;

TypeWeights weights_from_vector(const std::vector<double>& v) {
    std::map<std::string, double> m;
    for (std::size_t i = 0; i < kDependencyTypes.size(); ++i)
        m[kDependencyTypes[i]] = v[i];
    return TypeWeights::from_map(std::move(m));
}

double clamp_box(double x) {
    return std::clamp(x, TypeWeights::kMinWeight, TypeWeights::kMaxWeight);
}

} // namespace

OptimizeResult optimize_type_weights(const std::vector<DependencyGraph>& corpus, int budget,
                                     std::uint64_t seed) {
    if (corpus.empty())
        throw InputError("optimize_type_weights: corpus is empty");
    if (budget < 1)
        throw InputError("optimize_type_weights: budget must be >= 1");

    // Importance does not depend on type weights; fix it up front.
    std::vector<DependencyGraph> prepared;
    prepared.reserve(corpus.size());
    for (const DependencyGraph& g : corpus) {
        DependencyGraph fn = function_subgraph(g);
        if (fn.empty())
            prepared.push_back(uniform_importance(g));
        else
            prepared.push_back(propagate_importance(g, inverse_pagerank(fn)));
    }

    auto mean_quality = [&](const TypeWeights& tw) {
        double sum = 0.0;
        for (const DependencyGraph& g : prepared) {
            FileGraph fg = aggregate_to_files(weigh_edges(g, tw));
            if (fg.total_weight() <= 0.0)
                continue;  // contributes the floor: nothing to cluster
            Architecture arch = cluster::greedy_modularity(fg, 1.0);
            sum += cluster::modularity(fg, arch, 1.0);
        }
        return sum / static_cast<double>(prepared.size());
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(TypeWeights::kMinWeight, TypeWeights::kMaxWeight);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::normal_distribution<double> step(0.0, 1.0);

    const std::size_t dims = kDependencyTypes.size();
    std::vector<double> best(dims, 1.0);
    double best_q = 0.0;
    OptimizeResult result;

    // Converged once a whole window of evaluations fails to improve the
    // incumbent by at least the loss threshold.
    constexpr int kPatience = 50;
    int stale = 0;

    for (int eval = 1; eval <= budget; ++eval) {
        std::vector<double> candidate(dims);
        if (eval == 1 || coin(rng) < 0.5) {
            for (auto& x : candidate)
                x = box(rng);
        } else {
            // local refinement around the incumbent
            for (std::size_t i = 0; i < dims; ++i)
                candidate[i] = clamp_box(best[i] + step(rng));
        }

        const double q = mean_quality(weights_from_vector(candidate));
        result.evaluations = eval;
        if (eval == 1 || q > best_q) {
            const double gain = eval == 1 ? 0.0 : q - best_q;
            best = candidate;
            best_q = q;
            result.improvements.emplace_back(eval, q);
            stale = (eval > 1 && gain < kConvergenceLoss) ? stale + 1 : 0;
        } else {
            ++stale;
        }
        if (stale >= kPatience)
            break;
    }

    result.weights = weights_from_vector(best);
    result.best_quality = best_q;
    return result;
}

} // namespace archrec
