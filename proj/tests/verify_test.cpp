#include <catch2/catch_amalgamated.hpp>

#include "ecc/verify.hpp"
#include "test_util.hpp"

using namespace ecc;
using namespace ecc_test;

TEST_CASE("monochromatic_connected basics") {
    auto k3 = complete_n(3);
    CHECK(monochromatic_connected(EdgeColoring(k3, {1, 1, 1})).ok);

    auto p3 = path_n(3);
    auto res = monochromatic_connected(EdgeColoring(p3, {1, 2}));
    CHECK_FALSE(res.ok);
    REQUIRE(res.failing_pair.has_value());

    // C5 with a spanning path in one color and a fresh color on the last edge
    auto c5 = cycle_n(5);
    CHECK(monochromatic_connected(EdgeColoring(c5, {1, 1, 1, 1, 2})).ok);
}

TEST_CASE("properly_connected basics") {
    auto p4 = path_n(4);
    CHECK(properly_connected(EdgeColoring(p4, {1, 2, 1})).ok);
    auto p3 = path_n(3);
    CHECK_FALSE(properly_connected(EdgeColoring(p3, {1, 1})).ok);
    auto k4 = complete_n(4);
    CHECK(properly_connected(EdgeColoring(k4, {1, 1, 1, 1, 1, 1})).ok);
    CHECK_THROWS_AS(properly_connected(EdgeColoring(Graph({"a", "b", "c"}, {{"a", "b"}}), {1})),
                    error);
}

TEST_CASE("conflict_free_connected basics") {
    Graph e1({"a", "b"}, {{"a", "b"}});
    CHECK(conflict_free_connected(EdgeColoring(e1, {1})).ok);

    auto p4 = path_n(4);
    EdgeColoring mono(p4, {1, 1, 1});
    auto bad = conflict_free_connected(mono);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failing_pair.has_value());
    // the reported pair really fails (the endpoint pair is among the failures)
    CHECK_FALSE(raw_pair_cfc(mono, bad.failing_pair->first, bad.failing_pair->second));
    CHECK_FALSE(raw_pair_cfc(mono, 0, 3));

    CHECK(conflict_free_connected(EdgeColoring(p4, {1, 2, 1})).ok);
}

TEST_CASE("color_distance basics") {
    auto p3 = path_n(3);
    EdgeColoring f(p3, {1, 2});
    CHECK(color_distance(f, 0, 0) == 0);
    CHECK(color_distance(f, 0, 2) == 2);

    auto c4 = cycle_n(4);
    EdgeColoring g(c4, {1, 1, 2, 2});
    CHECK(color_distance(g, 0, 1) == 1);
}

TEST_CASE("color_diameter basics") {
    auto c5 = cycle_n(5);
    CHECK(color_diameter(EdgeColoring(c5, {1, 1, 1, 1, 1})) == 1);

    auto p6 = path_n(6);
    CHECK(color_diameter(EdgeColoring(p6, {1, 2, 3, 4, 5})) == 5);

    auto star = star_n(4);
    CHECK(color_diameter(EdgeColoring(star, {1, 2, 3, 4})) == 2);
}

TEST_CASE("is_k_color_connection basics") {
    auto star = star_n(4);
    EdgeColoring rainbow(star, {1, 2, 3, 4});
    CHECK(is_k_color_connection(rainbow, 2));
    CHECK_FALSE(is_k_color_connection(rainbow, 1));
    auto p5 = path_n(5);
    CHECK(is_k_color_connection(EdgeColoring(p5, {1, 1, 1, 1}), 1));
}

TEST_CASE("verifiers agree with the raw-definition path enumerator") {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_connected(rng, n, 0.35);
        EdgeColoring f = random_coloring(rng, g, 3);

        CHECK(monochromatic_connected(f).ok == raw_mono_connected(f));
        CHECK(properly_connected(f).ok == raw_properly_connected(f));
        CHECK(conflict_free_connected(f).ok == raw_cfc_connected(f));

        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                CHECK(color_distance(f, u, v) == raw_color_distance(f, u, v));
    }
}

TEST_CASE("positive answers carry witnesses that re-validate") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_connected(rng, n, 0.4);
        EdgeColoring f = random_coloring(rng, g, 3);

        auto mono = monochromatic_connected(f);
        if (mono.ok) {
            CHECK(mono.witnesses.size() == static_cast<size_t>(n * (n - 1) / 2));
            for (const auto& pr : mono.witnesses) {
                CHECK(witness_is_valid(f, pr.witness));
                std::set<int> cols(pr.witness.colors.begin(), pr.witness.colors.end());
                CHECK(cols.size() == 1);
                CHECK(pr.witness.vertices.front() == pr.u);
                CHECK(pr.witness.vertices.back() == pr.v);
            }
        }
        auto prop = properly_connected(f);
        if (prop.ok) {
            for (const auto& pr : prop.witnesses) {
                CHECK(witness_is_valid(f, pr.witness));
                for (size_t i = 0; i + 1 < pr.witness.colors.size(); ++i)
                    CHECK(pr.witness.colors[i] != pr.witness.colors[i + 1]);
            }
        }
        auto cfc = conflict_free_connected(f);
        if (cfc.ok) {
            for (const auto& pr : cfc.witnesses) {
                CHECK(witness_is_valid(f, pr.witness));
                int uses = 0;
                for (int c : pr.witness.colors)
                    if (c == pr.witness.unique_color) ++uses;
                CHECK(uses == 1);
            }
        }
    }
}

TEST_CASE("color_distance is a metric") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_connected(rng, n, 0.35);
        EdgeColoring f = random_coloring(rng, g, 3);
        for (int u = 0; u < n; ++u) CHECK(color_distance(f, u, u) == 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int duv = color_distance(f, u, v);
                CHECK(duv >= 1);
                CHECK(duv == color_distance(f, v, u));
                for (int w = 0; w < n; ++w)
                    CHECK(duv <= color_distance(f, u, w) + color_distance(f, w, v));
            }
    }
}

TEST_CASE("mono-connected iff color diameter 1") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_connected(rng, n, 0.4);
        EdgeColoring f = random_coloring(rng, g, 3);
        bool mono = monochromatic_connected(f).ok;
        CHECK(mono == (color_diameter(f) == 1));
        CHECK(mono == is_k_color_connection(f, 1));
    }
}

TEST_CASE("verifier verdicts are invariant under color renaming") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_connected(rng, n, 0.35);
        EdgeColoring f = random_coloring(rng, g, 3);
        // apply a random permutation to the color ids
        int p = f.num_colors();
        std::vector<int> perm(p);
        for (int i = 0; i < p; ++i) perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> renamed(g.m());
        for (int e = 0; e < g.m(); ++e) renamed[e] = perm[f.color(e) - 1];
        EdgeColoring h(g, renamed);
        CHECK(monochromatic_connected(f).ok == monochromatic_connected(h).ok);
        CHECK(properly_connected(f).ok == properly_connected(h).ok);
        CHECK(conflict_free_connected(f).ok == conflict_free_connected(h).ok);
        CHECK(color_diameter(f) == color_diameter(h));
    }
}
