#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "rainbow_forge/graph.hpp"

using namespace rainbow_forge;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

SimpleGraph permuted(const SimpleGraph& g, const std::vector<int>& perm) {
    SimpleGraph h(g.vertex_count());
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)],
                                             perm[static_cast<std::size_t>(v)]);
    return h;
}

}  // namespace

TEST_CASE("adjacency basics") {
    SimpleGraph g(5);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    CHECK(g.has_edge(3, 0));
    CHECK(!g.has_edge(0, 4));
    CHECK(g.degree(3) == 2);
    CHECK(g.edge_count() == 2);
    g.remove_edge(0, 3);
    CHECK(!g.has_edge(0, 3));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::domain_error);
    CHECK_THROWS_AS(SimpleGraph(65), std::domain_error);
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 10'000; ++i) {
        int n = 1 + static_cast<int>(rng() % 12);
        SimpleGraph g = random_graph(rng, n);
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("cross_edge_count complement identity") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2'000; ++i) {
        int n = 2 + static_cast<int>(rng() % 11);
        SimpleGraph g = random_graph(rng, n);
        std::uint64_t a = rng() & g.vertex_mask();
        std::uint64_t b = rng() & g.vertex_mask() & ~a;
        int expected = std::popcount(a) * std::popcount(b);
        CHECK(cross_edge_count(g, a, b) + cross_edge_count(g.complement(), a, b) == expected);
    }
}

TEST_CASE("induced subgraph with labels") {
    SimpleGraph g(5);
    g.add_edge(0, 2);
    g.add_edge(2, 4);
    g.add_edge(1, 3);
    std::vector<int> labels;
    SimpleGraph h = g.induced(vertex_bit(0) | vertex_bit(2) | vertex_bit(4), &labels);
    CHECK(h.vertex_count() == 3);
    CHECK(labels == std::vector<int>{0, 2, 4});
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));
    CHECK(!h.has_edge(0, 2));
}

TEST_CASE("triangle packing search") {
    SimpleGraph k6(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) k6.add_edge(u, v);

    auto p = find_triangle_packing(k6, 2);
    REQUIRE(p.has_value());
    CHECK(is_valid_packing(k6, *p));
    CHECK(!find_triangle_packing(k6, 3).has_value());
    CHECK(find_triangle_packing(k6, 0).has_value());  // vacuous

    // each unordered perfect 2-packing of K6 visited exactly once: C(6,3)/2
    int count = 0;
    for_each_triangle_packing(k6, 2, [&](const TrianglePacking& q) {
        CHECK(is_valid_packing(k6, q));
        ++count;
        return true;
    });
    CHECK(count == 10);

    SimpleGraph c6(6);
    for (int v = 0; v < 6; ++v) c6.add_edge(v, (v + 1) % 6);
    CHECK(!find_triangle_packing(c6, 1).has_value());
}

TEST_CASE("packing search is isomorphism invariant") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        int n = 4 + static_cast<int>(rng() % 7);
        SimpleGraph g = random_graph(rng, n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        SimpleGraph h = permuted(g, perm);
        for (int k = 1; 3 * k <= n; ++k)
            CHECK(find_triangle_packing(g, k).has_value() ==
                  find_triangle_packing(h, k).has_value());
    }
}

TEST_CASE("isomorphism test") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        int n = 3 + static_cast<int>(rng() % 8);
        SimpleGraph g = random_graph(rng, n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(are_isomorphic(g, permuted(g, perm)));
    }

    // same degree sequence, different structure: C6 vs two C3
    SimpleGraph c6(6), two_c3(6);
    for (int v = 0; v < 6; ++v) c6.add_edge(v, (v + 1) % 6);
    two_c3.add_edge(0, 1);
    two_c3.add_edge(1, 2);
    two_c3.add_edge(0, 2);
    two_c3.add_edge(3, 4);
    two_c3.add_edge(4, 5);
    two_c3.add_edge(3, 5);
    CHECK(!are_isomorphic(c6, two_c3));
}

TEST_CASE("graph json round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        SimpleGraph g = random_graph(rng, 2 + static_cast<int>(rng() % 10));
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}
