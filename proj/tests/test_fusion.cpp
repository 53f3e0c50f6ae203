#include <doctest.h>

#include <cmath>

#include "archrec/core/error.hpp"
#include "archrec/fusion/fusion.hpp"
#include "archrec/fusion/linkage.hpp"
#include "archrec/ingest/folder_scan.hpp"
#include "archrec/folders/filter.hpp"
#include "helpers.hpp"

using namespace archrec;
using namespace archrec::fusion;

namespace {

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

textual::TopicCorrelations correlations_for(std::vector<TopicEmbedding> es) {
    return textual::TopicCorrelations(std::move(es));
}

} // namespace

TEST_CASE("recover_dep_only splits disconnected triangles") {
    const Architecture arch = recover_dep_only(two_triangles(), 1.0);
    CHECK(arch.cluster_count() == 2);

    FileGraph lone({"only"});
    CHECK(recover_dep_only(lone, 1.0).cluster_count() == 1);

    CHECK(recover_dep_only(two_triangles(), 1.0) == recover_dep_only(two_triangles(), 1.0));
}

TEST_CASE("recover_text_only cuts complete linkage at k") {
    // two perfectly correlated pairs; across pairs anti-correlated
    const auto corr = correlations_for({{"a", {0.9, 0.1}},
                                        {"b", {0.9, 0.1}},
                                        {"c", {0.1, 0.9}},
                                        {"d", {0.1, 0.9}}});
    const Architecture two = recover_text_only(corr, 2);
    REQUIRE(two.cluster_count() == 2);
    CHECK(*two.cluster_of("a") == *two.cluster_of("b"));
    CHECK(*two.cluster_of("c") == *two.cluster_of("d"));
    CHECK(*two.cluster_of("a") != *two.cluster_of("c"));

    CHECK(recover_text_only(corr, 4).cluster_count() == 4);  // singletons
    CHECK(recover_text_only(corr, 1).cluster_count() == 1);
    CHECK_THROWS_AS(recover_text_only(corr, 5), InputError);
}

TEST_CASE("assign_weights compares against the dependency recovery") {
    const Architecture dep = testutil::arch({{"a", "b"}, {"c", "d"}});
    const Architecture same = testutil::arch({{"a", "b"}, {"c", "d"}});
    const Architecture other = testutil::arch({{"a", "c"}, {"b", "d"}});
    const FusionWeights w = assign_weights(dep, same, other);
    CHECK(w.text == doctest::Approx(1.0));
    CHECK(w.folder < 1.0);
    CHECK_THROWS_AS(assign_weights(dep, same, testutil::arch({{"x"}})), InputError);
}

TEST_CASE("apply_text_coefficients scales edges and adds highly similar pairs") {
    FileGraph fg({"a", "b", "c"});
    fg.add_edge("a", "b", 2.0);
    // corr(a,b) = 1, corr(a,c) = corr(b,c) = -1 under these embeddings
    const auto corr = correlations_for({{"a", {0.9, 0.1}}, {"b", {0.88, 0.12}}, {"c", {0.1, 0.9}}});

    SUBCASE("zero weight is the identity and adds nothing") {
        const FileGraph out = apply_text_coefficients(fg, corr, 0.0);
        CHECK(out == fg);
    }

    SUBCASE("positive weight multiplies by 1 + corr*w and adds the a-c style pairs") {
        const FileGraph out = apply_text_coefficients(fg, corr, 0.5);
        const auto a = *out.index_of("a");
        const auto b = *out.index_of("b");
        const auto c = *out.index_of("c");
        CHECK(out.edge(a, b) == doctest::Approx(2.0 * 1.5));  // corr 1 -> coef 1.5
        // corr(a,b)=1 > 0.8 but the edge exists; corr(a,c) = -1 adds nothing
        CHECK_FALSE(out.has_edge(a, c));
        CHECK_FALSE(out.has_edge(c, a));
        CHECK(out.edge_count() == 1);
        (void)b;
    }

    SUBCASE("bidirectional edges appear between unconnected correlated pairs") {
        FileGraph g2({"a", "b", "c", "d"});
        g2.add_edge("a", "b", 4.0);
        g2.add_edge("c", "a", 1.0);
        const auto c2 = correlations_for(
            {{"a", {0.9, 0.1}}, {"b", {0.7, 0.3}}, {"c", {0.2, 0.8}}, {"d", {0.21, 0.79}}});
        // corr(c,d) ~ 1 and no edge between them
        const FileGraph out = apply_text_coefficients(g2, c2, 0.5);
        const auto c_i = *out.index_of("c");
        const auto d_i = *out.index_of("d");
        REQUIRE(out.has_edge(c_i, d_i));
        REQUIRE(out.has_edge(d_i, c_i));
        CHECK(out.edge(c_i, d_i) == doctest::Approx(out.edge(d_i, c_i)));
        // median positive weight of the input graph is 2.5
        CHECK(out.edge(c_i, d_i) ==
              doctest::Approx(2.5 * (1.0 + c2.corr_by_id("c", "d") * 0.5)));
    }

    SUBCASE("strong anticorrelation floors at the configured minimum") {
        FuseOptions opts;
        opts.coef_floor = 0.05;
        FileGraph g3({"a", "c"});
        g3.add_edge("a", "c", 1.0);
        const auto c3 = correlations_for({{"a", {0.9, 0.1}}, {"c", {0.1, 0.9}}});
        const FileGraph out = apply_text_coefficients(g3, c3, 1.0, opts);
        CHECK(out.edge(0, 1) == doctest::Approx(0.05));  // 1 + (-1)(1) floored
        CHECK(out.edge(0, 1) > 0.0);
    }
}

TEST_CASE("apply_folder_coefficients boosts intra-folder edges only") {
    FileGraph fg({"m/a.c", "m/b.c", "n/c.c"});
    fg.add_edge("m/a.c", "m/b.c", 1.0);
    fg.add_edge("m/a.c", "n/c.c", 1.0);
    const FolderTree tree = scan_folders(
        std::vector<std::pair<std::string, std::string>>{{"m/a.c", "m/a.c"}, {"m/b.c", "m/b.c"}, {"n/c.c", "n/c.c"}});
    const FolderTree filtered = archrec::folders::filter_folders(tree, fg);

    const FileGraph half = apply_folder_coefficients(fg, filtered, 0.5);
    CHECK(half.edge(*half.index_of("m/a.c"), *half.index_of("m/b.c")) == doctest::Approx(2.0));
    CHECK(half.edge(*half.index_of("m/a.c"), *half.index_of("n/c.c")) == doctest::Approx(1.0));

    const FileGraph zero = apply_folder_coefficients(fg, filtered, 0.0);
    CHECK(zero == fg);

    // the 0.95 clamp bounds the coefficient at 20
    const FileGraph extreme = apply_folder_coefficients(fg, filtered, 1.0);
    CHECK(extreme.edge(*extreme.index_of("m/a.c"), *extreme.index_of("m/b.c")) ==
          doctest::Approx(20.0));
}

TEST_CASE("fuse is the identity under zero weights") {
    const FileGraph fg = two_triangles();
    const auto corr = correlations_for({{"a1", {0.5, 0.5}},
                                        {"a2", {0.5, 0.5}},
                                        {"a3", {0.5, 0.5}},
                                        {"b1", {0.5, 0.5}},
                                        {"b2", {0.5, 0.5}},
                                        {"b3", {0.5, 0.5}}});
    const FolderTree tree = scan_folders(std::vector<std::pair<std::string, std::string>>{
        {"a1", "a1"}, {"a2", "a2"}, {"a3", "a3"}, {"b1", "b1"}, {"b2", "b2"}, {"b3", "b3"}});

    FusionWeights zero;
    const FileGraph fused = fuse(fg, &corr, &tree, zero);
    CHECK(fused == fg);

    // null sources are the ablation path
    const FileGraph ablated = fuse(fg, nullptr, nullptr, FusionWeights{0.7, 0.7});
    CHECK(ablated == fg);

    // all weights stay positive and finite after fusion
    FusionWeights strong{0.9, 0.9};
    const FileGraph boosted = fuse(fg, &corr, &tree, strong);
    for (const auto& [_, w] : boosted.edges()) {
        CHECK(w > 0.0);
        CHECK(std::isfinite(w));
    }
}

TEST_CASE("fuse multiplies both coefficients on existing edges") {
    FileGraph fg({"m/a.c", "m/b.c"});
    fg.add_edge("m/a.c", "m/b.c", 0.5);
    const auto corr = correlations_for({{"m/a.c", {0.8, 0.2}}, {"m/b.c", {0.7, 0.3}}});
    const FolderTree tree = scan_folders(
        std::vector<std::pair<std::string, std::string>>{{"m/a.c", "m/a.c"}, {"m/b.c", "m/b.c"}});
    // corr = 1; w_text 0.4 -> coef_t = 1.4; w_folder 0.5 -> coef_f = 2
    const FileGraph fused = fuse(fg, &corr, &tree, FusionWeights{0.4, 0.5});
    CHECK(fused.edge(0, 1) == doctest::Approx(0.5 * 1.4 * 2.0));
}

TEST_CASE("complete linkage merges by the farthest-pair rule") {
    // hand distances: three tight points and one outlier
    std::vector<std::vector<double>> d = {
        {0.0, 0.1, 0.2, 5.0},
        {0.1, 0.0, 0.15, 5.5},
        {0.2, 0.15, 0.0, 6.0},
        {5.0, 5.5, 6.0, 0.0},
    };
    auto merges = complete_linkage(4, [&](std::size_t i, std::size_t j) { return d[i][j]; });
    REQUIRE(merges.size() == 3);
    auto labels = cut_dendrogram(4, merges, 2);
    CHECK(labels[0] == labels[1]);
    CHECK(labels[1] == labels[2]);
    CHECK(labels[3] != labels[0]);
    // the final merge pays the farthest-pair distance
    double top = 0.0;
    for (const auto& m : merges)
        top = std::max(top, m.height);
    CHECK(top == doctest::Approx(6.0));
}
