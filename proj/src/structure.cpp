#include "rainbow_forge/structure.hpp"

#include <algorithm>

#include <json.hpp>

#include "rainbow_forge/fixtures.hpp"

namespace rainbow_forge::structure {

bool is_valid_equitable_partition(const SimpleGraph& g, const EquitablePartition& p) {
    std::uint64_t seen = 0;
    for (const auto& t : p.parts) {
        std::uint64_t m = vertex_bit(t[0]) | vertex_bit(t[1]) | vertex_bit(t[2]);
        if (std::popcount(m) != 3 || (m & seen)) return false;
        if (g.has_edge(t[0], t[1]) || g.has_edge(t[0], t[2]) || g.has_edge(t[1], t[2]))
            return false;
        seen |= m;
    }
    return seen == g.vertex_mask() && 3 * static_cast<int>(p.parts.size()) == g.vertex_count();
}

namespace {

std::uint64_t mask_of(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= vertex_bit(v);
    return m;
}

bool complete_between(const SimpleGraph& g, std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t m = a; m; m &= m - 1)
        if ((g.neighbors(std::countr_zero(m)) & b) != b) return false;
    return true;
}

bool independent_set(const SimpleGraph& g, std::uint64_t a) {
    for (std::uint64_t m = a; m; m &= m - 1)
        if (g.neighbors(std::countr_zero(m)) & a) return false;
    return true;
}

bool partition_search(const SimpleGraph& g, std::uint64_t assigned,
                      std::vector<std::array<int, 3>>& acc, int k) {
    if (static_cast<int>(acc.size()) == k) return true;
    std::uint64_t free = ~assigned & g.vertex_mask();
    int v = std::countr_zero(free);
    std::uint64_t cand = free & ~g.neighbors(v) & ~(vertex_bit(v) | (vertex_bit(v) - 1));
    for (std::uint64_t mu = cand; mu; mu &= mu - 1) {
        int u = std::countr_zero(mu);
        for (std::uint64_t mw = cand & ~g.neighbors(u) & ~(vertex_bit(u) | (vertex_bit(u) - 1));
             mw; mw &= mw - 1) {
            int w = std::countr_zero(mw);
            acc.push_back({v, u, w});
            if (partition_search(g, assigned | vertex_bit(v) | vertex_bit(u) | vertex_bit(w),
                                 acc, k))
                return true;
            acc.pop_back();
        }
    }
    return false;
}

}  // namespace

std::optional<EquitablePartition> equitable_independent_partition(const SimpleGraph& g, int k) {
    if (g.vertex_count() != 3 * k)
        throw std::domain_error("equitable_independent_partition: requires v(g) = 3k");
    if (k == 0) return EquitablePartition{};
    std::vector<std::array<int, 3>> acc;
    if (partition_search(g, 0, acc, k)) return EquitablePartition{acc};
    return std::nullopt;
}

EquitablePartition check_sparse_partition_lemma(const SimpleGraph& g, int k) {
    if (k < 4) throw std::domain_error("sparse partition: requires k >= 4");
    if (g.vertex_count() != 3 * k) throw std::domain_error("sparse partition: requires v(g) = 3k");
    if (g.edge_count() > 3 * k - 3)
        throw std::domain_error("sparse partition: requires e(g) <= 3k-3");
    auto p = equitable_independent_partition(g, k);
    if (!p)
        throw LemmaViolation("sparse partition guarantee failed: no equitable partition found");
    return *p;
}

EquitablePartition check_hajnal_szemeredi(const SimpleGraph& g, int k) {
    if (g.vertex_count() != 3 * k)
        throw std::domain_error("equitable partition: requires v(g) = 3k");
    if (degree_stats(g).max_degree > k - 1)
        throw std::domain_error("equitable partition: requires max degree <= k-1");
    auto p = equitable_independent_partition(g, k);
    if (!p)
        throw LemmaViolation("equitable partition guarantee failed under max-degree bound");
    return *p;
}

PathTriangleMergeResult merge_path_triangle(const SimpleGraph& g) {
    if (g.vertex_count() != 6 || !g.has_edge(0, 1) || !g.has_edge(1, 2) ||
        !g.has_edge(3, 4) || !g.has_edge(3, 5) || !g.has_edge(4, 5))
        throw std::domain_error("merge_path_triangle: expects path 0-1-2 and triangle 3,4,5");
    PathTriangleMergeResult r;
    if (auto p = find_triangle_packing(g, 2)) {
        r.outcome = MergeOutcome::two_triangles;
        r.packing = *p;
        return r;
    }
    std::uint64_t tri = vertex_bit(3) | vertex_bit(4) | vertex_bit(5);
    std::uint64_t nu = g.neighbors(0) & tri, nv = g.neighbors(1) & tri,
                  nw = g.neighbors(2) & tri;
    if (std::popcount(nu) == 2 && nu == nw && std::popcount(nv) == 3)
        r.outcome = MergeOutcome::exception_pattern;
    return r;
}

std::optional<TrianglePacking> merge_matching_triangle(const SimpleGraph& g) {
    if (g.vertex_count() != 7 || !g.has_edge(0, 1) || !g.has_edge(2, 3) ||
        !g.has_edge(4, 5) || !g.has_edge(4, 6) || !g.has_edge(5, 6))
        throw std::domain_error(
            "merge_matching_triangle: expects matching 0-1, 2-3 and triangle 4,5,6");
    return find_triangle_packing(g, 2);
}

TrianglePacking dirac_packing(const SimpleGraph& g, int k) {
    int n = g.vertex_count();
    if (n < 3 * k) throw std::domain_error("dirac_packing: requires n >= 3k");
    if (2 * degree_stats(g).min_degree < n + k)
        throw std::domain_error("dirac_packing: requires min degree >= (n+k)/2");
    auto p = find_triangle_packing(g, k);
    if (!p) throw LemmaViolation("degree condition failed to yield a packing");
    return *p;
}

bool is_valid_tripartition(const SimpleGraph& g, const Tripartition& t) {
    std::uint64_t m1 = mask_of(t.v1), m2 = mask_of(t.v2), m3 = mask_of(t.v3);
    if ((m1 & m2) || (m1 & m3) || (m2 & m3)) return false;
    if ((m1 | m2 | m3) != g.vertex_mask()) return false;
    if (t.v2.size() != t.v3.size()) return false;
    return independent_set(g, m2) && independent_set(g, m3) &&
           complete_between(g, m1, m2 | m3) && complete_between(g, m2, m3);
}

bool is_valid_packing_with_remainder(const SimpleGraph& g, const PackingWithRemainder& c) {
    if (!is_valid_packing(g, c.core)) return false;
    std::uint64_t core = c.core.vertex_mask();
    std::uint64_t a = mask_of(c.side_a), b = mask_of(c.side_b);
    if ((a & b) || (a & core) || (b & core)) return false;
    if ((core | a | b) != g.vertex_mask()) return false;
    if (std::popcount(a) < 2 || std::popcount(b) < 2) return false;
    return independent_set(g, a) && independent_set(g, b) && complete_between(g, a, b);
}

namespace {

std::vector<int> to_vertex_list(std::uint64_t m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

// Lex-ordered subsets of size r of 0..n-1, as masks, visited until callback
// returns false.
bool for_each_subset(int n, int r, const std::function<bool(std::uint64_t)>& visit) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (r > n) return true;
    while (true) {
        std::uint64_t m = 0;
        for (int i : idx) m |= vertex_bit(i);
        if (!visit(m)) return false;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// The remainder must induce a complete bipartite graph: its complement is
// the disjoint union of exactly two cliques (the sides).
std::optional<std::pair<std::uint64_t, std::uint64_t>> complete_bipartite_sides(
    const SimpleGraph& g, std::uint64_t rest) {
    std::vector<int> labels = to_vertex_list(rest);
    if (labels.size() < 2) return std::nullopt;
    int anchor = labels[0];
    std::uint64_t side1 = (~g.neighbors(anchor) & rest) | vertex_bit(anchor);
    std::uint64_t side2 = rest & ~side1;
    if (!side2) return std::nullopt;
    if (!independent_set(g, side1) || !independent_set(g, side2)) return std::nullopt;
    if (!complete_between(g, side1, side2)) return std::nullopt;
    return std::make_pair(side1, side2);
}

}  // namespace

StructureCertificate lemma9_structure(const SimpleGraph& g, int k) {
    int n = g.vertex_count();
    if (n < 3 * k) throw std::domain_error("lemma9_structure: requires n >= 3k");
    if (2 * degree_stats(g).min_degree < n + k - 1)
        throw std::domain_error("lemma9_structure: requires min degree >= (n+k-1)/2");
    if (auto p = find_triangle_packing(g, k)) return *p;

    // Tripartition: v1 of size k-1, remainder splitting into two equal
    // independent sides, all cross pairs adjacent. Only possible when n-k
    // is odd.
    std::optional<Tripartition> tri;
    if ((n - k + 1) % 2 == 0) {
        int half = (n - k + 1) / 2;
        for_each_subset(n, k - 1, [&](std::uint64_t v1) {
            std::uint64_t rest = g.vertex_mask() & ~v1;
            if (!complete_between(g, v1, rest)) return true;
            auto sides = complete_bipartite_sides(g, rest);
            if (!sides || std::popcount(sides->first) != half) return true;
            tri = Tripartition{to_vertex_list(v1), to_vertex_list(sides->first),
                               to_vertex_list(sides->second)};
            return false;
        });
    }
    if (tri) return *tri;
    if (n == 10 && are_isomorphic(g, fixtures::exceptional_graph())) return ExceptionalOutlier{};
    throw LemmaViolation("structure guarantee failed: no packing, tripartition or outlier");
}

StructureCertificate lemma10_structure(const SimpleGraph& g, int k) {
    int n = g.vertex_count();
    if (n < 3 * k + 1) throw std::domain_error("lemma10_structure: requires n >= 3k+1");
    if (2 * degree_stats(g).min_degree < n + k - 2)
        throw std::domain_error("lemma10_structure: requires min degree >= (n+k-2)/2");
    if (auto p = find_triangle_packing(g, k)) return *p;
    if (!find_triangle_packing(g, k - 1))
        throw std::domain_error("lemma10_structure: requires a (k-1)-packing");

    std::optional<PackingWithRemainder> found;
    for_each_triangle_packing(g, k - 1, [&](const TrianglePacking& p) {
        std::uint64_t rest = g.vertex_mask() & ~p.vertex_mask();
        auto sides = complete_bipartite_sides(g, rest);
        if (!sides || std::popcount(sides->first) < 2 || std::popcount(sides->second) < 2)
            return true;
        found = PackingWithRemainder{p, to_vertex_list(sides->first),
                                     to_vertex_list(sides->second)};
        return false;
    });
    if (found) return *found;
    throw LemmaViolation("structure guarantee failed: no packing-with-remainder found");
}

std::string certificate_to_json(const StructureCertificate& cert) {
    nlohmann::ordered_json j;
    if (const auto* p = std::get_if<TrianglePacking>(&cert)) {
        j["variant"] = "packing";
        j["triples"] = nlohmann::json::array();
        for (const auto& t : p->triples) j["triples"].push_back({t[0], t[1], t[2]});
    } else if (const auto* t = std::get_if<Tripartition>(&cert)) {
        j["variant"] = "tripartition";
        j["v1"] = t->v1;
        j["v2"] = t->v2;
        j["v3"] = t->v3;
    } else if (const auto* r = std::get_if<PackingWithRemainder>(&cert)) {
        j["variant"] = "packing-with-remainder";
        j["core"] = nlohmann::json::array();
        for (const auto& t : r->core.triples) j["core"].push_back({t[0], t[1], t[2]});
        j["side_a"] = r->side_a;
        j["side_b"] = r->side_b;
    } else {
        j["variant"] = "exceptional-outlier";
    }
    return j.dump();
}

}  // namespace rainbow_forge::structure
