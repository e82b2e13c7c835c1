#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbow_forge/bounds.hpp"
#include "rainbow_forge/constructions.hpp"

using namespace rainbow_forge;

TEST_CASE("color counts match the closed formulas") {
    for (int k = 2; k <= 5; ++k)
        for (int n = 3 * k; n <= 18; ++n) {
            CHECK(clique_plus_pendant_coloring(n, k).color_count() ==
                  bounds::clique_construction_value(n, k));
            CHECK(bipartite_join_coloring(n, k).color_count() ==
                  bounds::join_construction_value(n, k));
        }
}

TEST_CASE("no rainbow packing at desk scale") {
    for (int k = 2; k <= 3; ++k)
        for (int n = 3 * k; n <= 10; ++n) {
            CHECK(!find_rainbow_triangle_packing(clique_plus_pendant_coloring(n, k), k));
            CHECK(!find_rainbow_triangle_packing(bipartite_join_coloring(n, k), k));
        }
}

TEST_CASE("clique construction layout") {
    auto col = clique_plus_pendant_coloring(8, 2);
    // vertices 0..4 form a rainbow K5 on colors 1..10
    std::vector<char> seen(11, 0);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            int c = col.color(u, v);
            CHECK(c <= 10);
            CHECK(!seen[static_cast<std::size_t>(c)]);
            seen[static_cast<std::size_t>(c)] = 1;
        }
    // each appended vertex carries one fresh color on all its back edges
    for (int i = 5; i < 8; ++i) {
        int fresh = 10 + (i - 4);
        for (int v = 0; v < i; ++v) CHECK(col.color(v, i) == fresh);
    }
}

TEST_CASE("join construction layout degenerates for k=2") {
    // no apexes: rainbow K_{5,5} plus one extra color on the side-internal edges
    auto col = bipartite_join_coloring(10, 2);
    int extra = col.color_count();
    auto classes = col.color_classes();
    int singletons = 0;
    for (int c = 1; c < extra; ++c) {
        CHECK(classes[static_cast<std::size_t>(c)].size() == 1);
        auto [u, v] = classes[static_cast<std::size_t>(c)][0];
        CHECK(u < 5);
        CHECK(v >= 5);  // rainbow classes live on the S-T cut
        ++singletons;
    }
    CHECK(singletons == 25);
    // the extra class is everything inside S and inside T
    CHECK(classes[static_cast<std::size_t>(extra)].size() == 2 * 10);
    for (auto [u, v] : classes[static_cast<std::size_t>(extra)])
        CHECK(((u < 5 && v < 5) || (u >= 5 && v >= 5)));
}

TEST_CASE("join construction apex layout for k=3") {
    auto col = bipartite_join_coloring(9, 3);
    CHECK(col.color_count() == 25);
    // vertex 0 is the single apex: all its edges are rainbow singletons
    auto classes = col.color_classes();
    for (int v = 1; v < 9; ++v)
        CHECK(classes[static_cast<std::size_t>(col.color(0, v))].size() == 1);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(clique_plus_pendant_coloring(5, 2), std::domain_error);
    CHECK_THROWS_AS(bipartite_join_coloring(8, 3), std::domain_error);
    CHECK_THROWS_AS(bipartite_join_coloring(6, 1), std::domain_error);
}
