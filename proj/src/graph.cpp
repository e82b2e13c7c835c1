#include "rainbow_forge/graph.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace rainbow_forge {

SimpleGraph SimpleGraph::induced(std::uint64_t mask, std::vector<int>* out_labels) const {
    mask &= vertex_mask();
    std::vector<int> labels;
    for (std::uint64_t m = mask; m; m &= m - 1) labels.push_back(std::countr_zero(m));
    SimpleGraph g(static_cast<int>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (has_edge(labels[i], labels[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (out_labels) *out_labels = std::move(labels);
    return g;
}

DegreeStats degree_stats(const SimpleGraph& g) {
    if (g.vertex_count() == 0) throw std::domain_error("degree_stats: empty graph");
    DegreeStats s;
    s.degrees.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) s.degrees.push_back(g.degree(v));
    auto [mn, mx] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *mn;
    s.max_degree = *mx;
    return s;
}

int cross_edge_count(const SimpleGraph& g, std::uint64_t a, std::uint64_t b) {
    if (a & b) throw std::domain_error("cross_edge_count: sets overlap");
    int total = 0;
    for (std::uint64_t m = a & g.vertex_mask(); m; m &= m - 1)
        total += std::popcount(g.neighbors(std::countr_zero(m)) & b);
    return total;
}

bool is_valid_packing(const SimpleGraph& g, const TrianglePacking& p) {
    std::uint64_t seen = 0;
    for (const auto& t : p.triples) {
        std::uint64_t m = vertex_bit(t[0]) | vertex_bit(t[1]) | vertex_bit(t[2]);
        if (std::popcount(m) != 3 || (m & seen)) return false;
        for (int v : t)
            if (v < 0 || v >= g.vertex_count()) return false;
        if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[0], t[2]) || !g.has_edge(t[1], t[2]))
            return false;
        seen |= m;
    }
    return true;
}

namespace {

// Branches on the least vertex not yet decided: either it anchors the next
// triple or it is excluded from the packing. Each unordered packing is
// visited exactly once.
bool packing_search(const SimpleGraph& g, int k, std::uint64_t unavailable,
                    std::vector<std::array<int, 3>>& acc,
                    const std::function<bool(const TrianglePacking&)>& visit) {
    if (static_cast<int>(acc.size()) == k) {
        TrianglePacking p{acc};
        return visit(p);  // false = stop the whole enumeration
    }
    std::uint64_t free = ~unavailable & g.vertex_mask();
    int needed = 3 * (k - static_cast<int>(acc.size()));
    if (std::popcount(free) < needed) return true;
    int v = std::countr_zero(free);
    std::uint64_t cand = g.neighbors(v) & free;
    for (std::uint64_t mu = cand; mu; mu &= mu - 1) {
        int u = std::countr_zero(mu);
        for (std::uint64_t mw = cand & g.neighbors(u) & ~(vertex_bit(u) | (vertex_bit(u) - 1));
             mw; mw &= mw - 1) {
            int w = std::countr_zero(mw);
            acc.push_back({v, u, w});
            bool keep = packing_search(
                g, k, unavailable | vertex_bit(v) | vertex_bit(u) | vertex_bit(w), acc, visit);
            acc.pop_back();
            if (!keep) return false;
        }
    }
    // v takes part in no triple
    return packing_search(g, k, unavailable | vertex_bit(v), acc, visit);
}

}  // namespace

void for_each_triangle_packing(const SimpleGraph& g, int k,
                               const std::function<bool(const TrianglePacking&)>& visit) {
    if (k < 0) throw std::domain_error("packing size must be nonnegative");
    std::vector<std::array<int, 3>> acc;
    packing_search(g, k, 0, acc, visit);
}

std::optional<TrianglePacking> find_triangle_packing(const SimpleGraph& g, int k) {
    if (k == 0) return TrianglePacking{};  // vacuous success
    if (3 * k > g.vertex_count()) return std::nullopt;
    std::optional<TrianglePacking> found;
    for_each_triangle_packing(g, k, [&](const TrianglePacking& p) {
        found = p;
        return false;
    });
    return found;
}

namespace {

std::vector<int> refined_degree_signature(const SimpleGraph& g) {
    // Iterated neighbor-degree hashing; equal multisets are a necessary
    // condition for isomorphism and cut the backtracking down at n <= 20.
    std::vector<int> sig(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) sig[static_cast<std::size_t>(v)] = g.degree(v);
    for (int round = 0; round < 3; ++round) {
        std::vector<int> next(sig.size());
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> around;
            for (std::uint64_t m = g.neighbors(v); m; m &= m - 1)
                around.push_back(sig[static_cast<std::size_t>(std::countr_zero(m))]);
            std::sort(around.begin(), around.end());  // label-independent fold
            long long h = sig[static_cast<std::size_t>(v)];
            for (int x : around) h = (h * 31 + x) % 1000003;
            next[static_cast<std::size_t>(v)] = static_cast<int>(h);
        }
        sig = std::move(next);
    }
    return sig;
}

bool iso_extend(const SimpleGraph& g, const SimpleGraph& h, const std::vector<int>& sg,
                const std::vector<int>& sh, std::vector<int>& map, std::uint64_t used) {
    int v = static_cast<int>(std::count_if(map.begin(), map.end(), [](int x) { return x >= 0; }));
    if (v == g.vertex_count()) return true;
    for (int w = 0; w < h.vertex_count(); ++w) {
        if (used & vertex_bit(w)) continue;
        if (sg[static_cast<std::size_t>(v)] != sh[static_cast<std::size_t>(w)]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != h.has_edge(map[static_cast<std::size_t>(u)], w)) ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        if (iso_extend(g, h, sg, sh, map, used | vertex_bit(w))) return true;
        map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    auto sg = refined_degree_signature(g);
    auto sh = refined_degree_signature(h);
    auto a = sg, b = sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
    return iso_extend(g, h, sg, sh, map, 0);
}

std::string graph_to_json(const SimpleGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

SimpleGraph graph_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    SimpleGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::runtime_error("malformed edge entry");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

}  // namespace rainbow_forge
