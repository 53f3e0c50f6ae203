#include <doctest.h>

#include <random>

#include "archrec/cluster/modularity.hpp"
#include "archrec/core/error.hpp"
#include "archrec/depgraph/file_graph.hpp"
#include "helpers.hpp"

using namespace archrec;
using archrec::cluster::greedy_modularity;
using archrec::cluster::modularity;

namespace {

// two disconnected directed triangles with unit weights
FileGraph two_triangles() {
    FileGraph fg({"a1", "a2", "a3", "b1", "b2", "b3"});
    fg.add_edge("a1", "a2", 1.0);
    fg.add_edge("a2", "a3", 1.0);
    fg.add_edge("a3", "a1", 1.0);
    fg.add_edge("b1", "b2", 1.0);
    fg.add_edge("b2", "b3", 1.0);
    fg.add_edge("b3", "b1", 1.0);
    return fg;
}

FileGraph seeded_modular_graph(std::uint64_t seed) {
    std::vector<std::string> names;
    for (int i = 0; i < 24; ++i)
        names.push_back("f" + std::string(1, static_cast<char>('a' + i / 10)) +
                        std::to_string(i % 10));
    FileGraph fg(names);
    std::mt19937_64 rng(seed);
    auto chance = [&](double p) { return (rng() >> 11) * (1.0 / 9007199254740992.0) < p; };
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = 0; j < names.size(); ++j) {
            if (i == j)
                continue;
            const bool same_block = i / 6 == j / 6;
            if (chance(same_block ? 0.6 : 0.05))
                fg.add_edge(i, j, 1.0);
        }
    }
    return fg;
}

} // namespace

TEST_CASE("modularity of the two-triangle fixture") {
    const FileGraph fg = two_triangles();
    const auto split = testutil::arch({{"a1", "a2", "a3"}, {"b1", "b2", "b3"}});
    CHECK(modularity(fg, split, 1.0) == doctest::Approx(0.5).epsilon(1e-12));

    const auto lumped = testutil::arch({{"a1", "a2", "a3", "b1", "b2", "b3"}});
    CHECK(modularity(fg, lumped, 1.0) == doctest::Approx(0.0).epsilon(1e-12));

    // singleton partition of a self-loop-free graph: only the null term
    const auto singletons =
        testutil::arch({{"a1"}, {"a2"}, {"a3"}, {"b1"}, {"b2"}, {"b3"}});
    const double expected = -1.0 * 6.0 * (2.0 / 12.0) * (2.0 / 12.0);
    CHECK(modularity(fg, singletons, 1.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("modularity of an empty graph is an error") {
    FileGraph fg({"a", "b"});
    CHECK_THROWS_AS(modularity(fg, testutil::arch({{"a"}, {"b"}}), 1.0), PipelineError);
    CHECK_THROWS_AS(modularity(fg, testutil::arch({{"a"}}), 1.0), InputError);  // not covering
}

TEST_CASE("greedy_modularity recovers the two triangles exactly") {
    const FileGraph fg = two_triangles();
    const Architecture result = greedy_modularity(fg, 1.0);
    REQUIRE(result.cluster_count() == 2);
    std::vector<std::set<std::string>> got;
    for (const auto& [_, files] : result.clusters())
        got.push_back(files);
    const std::set<std::string> ta{"a1", "a2", "a3"}, tb{"b1", "b2", "b3"};
    CHECK(((got[0] == ta && got[1] == tb) || (got[0] == tb && got[1] == ta)));
    CHECK(modularity(fg, result, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("isolated nodes stay in their own clusters") {
    FileGraph fg({"a", "b", "lone"});
    fg.add_edge("a", "b", 2.0);
    const Architecture result = greedy_modularity(fg, 1.0);
    REQUIRE(result.cluster_count() == 2);
    CHECK(*result.cluster_of("lone") != *result.cluster_of("a"));
    CHECK(*result.cluster_of("a") == *result.cluster_of("b"));
}

TEST_CASE("edgeless graphs come back as singletons") {
    FileGraph fg({"a", "b", "c"});
    const Architecture result = greedy_modularity(fg, 1.0);
    CHECK(result.cluster_count() == 3);
}

TEST_CASE("greedy_modularity is deterministic") {
    const FileGraph fg = seeded_modular_graph(5);
    const Architecture a = greedy_modularity(fg, 1.7);
    const Architecture b = greedy_modularity(fg, 1.7);
    CHECK(a == b);
}

TEST_CASE("returned partition beats the all-singleton partition") {
    const FileGraph fg = seeded_modular_graph(11);
    const Architecture result = greedy_modularity(fg, 1.0);
    std::map<std::string, std::set<std::string>> singles;
    for (const auto& node : fg.nodes())
        singles.emplace(node, std::set<std::string>{node});
    const Architecture singletons = Architecture::from_clusters(std::move(singles));
    CHECK(modularity(fg, result, 1.0) >= modularity(fg, singletons, 1.0));
}

TEST_CASE("cluster count is non-decreasing in the resolution on the pinned fixture") {
    const FileGraph fg = seeded_modular_graph(1234);
    std::size_t prev = 0;
    for (double gamma : {0.5, 1.0, 1.7, 3.0}) {
        const std::size_t count = greedy_modularity(fg, gamma).cluster_count();
        CHECK(count >= prev);
        prev = count;
    }
    // higher resolution splits the complete-ish graph harder
    FileGraph complete({"a", "b", "c", "d", "e", "f"});
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (i != j)
                complete.add_edge(i, j, 1.0);
    CHECK(greedy_modularity(complete, 10.0).cluster_count() >=
          greedy_modularity(complete, 1.0).cluster_count());
}
