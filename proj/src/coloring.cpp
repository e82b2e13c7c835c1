#include "rainbow_forge/coloring.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace rainbow_forge {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_slots(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

EdgeColoring::EdgeColoring(int n, std::vector<int> colors)
    : n_(n), color_count_(0), colors_(std::move(colors)) {
    if (n < 0 || n > kMaxVertices) throw std::domain_error("vertex count out of range");
    if (static_cast<int>(colors_.size()) != edge_slots(n))
        throw ColoringParseError(ColoringFormatError::missing_pair,
                                 "coloring must assign every pair of K_n");
    int max_id = 0;
    for (int c : colors_) {
        if (c < 1) throw ColoringParseError(ColoringFormatError::gapped_colors,
                                            "color ids must be positive");
        max_id = std::max(max_id, c);
    }
    std::vector<char> seen(static_cast<std::size_t>(max_id) + 1, 0);
    for (int c : colors_) seen[static_cast<std::size_t>(c)] = 1;
    for (int c = 1; c <= max_id; ++c)
        if (!seen[static_cast<std::size_t>(c)])
            throw ColoringParseError(ColoringFormatError::gapped_colors,
                                     "color ids must be contiguous 1..c");
    color_count_ = max_id;
}

std::vector<std::vector<std::pair<int, int>>> EdgeColoring::color_classes() const {
    std::vector<std::vector<std::pair<int, int>>> classes(
        static_cast<std::size_t>(color_count_) + 1);
    for (auto [u, v] : all_pairs(n_))
        classes[static_cast<std::size_t>(color(u, v))].emplace_back(u, v);
    return classes;
}

EdgeColoring EdgeColoring::delete_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::domain_error("vertex index out of range");
    int m = n_ - 1;
    std::vector<int> reduced(static_cast<std::size_t>(edge_slots(m)));
    for (int a = 0; a < n_; ++a) {
        if (a == v) continue;
        for (int b = a + 1; b < n_; ++b) {
            if (b == v) continue;
            int na = a < v ? a : a - 1;
            int nb = b < v ? b : b - 1;
            reduced[static_cast<std::size_t>(edge_index(m, na, nb))] = color(a, b);
        }
    }
    // rank-compress surviving ids; original ids are not preserved
    std::vector<int> ids = reduced;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int& c : reduced)
        c = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), c) - ids.begin()) + 1;
    return EdgeColoring(m, std::move(reduced));
}

EdgeColoring rainbow_complete(int n) {
    std::vector<int> colors(static_cast<std::size_t>(edge_slots(n)));
    std::iota(colors.begin(), colors.end(), 1);
    return EdgeColoring(n, std::move(colors));
}

EdgeColoring monochromatic_complete(int n) {
    return EdgeColoring(n, std::vector<int>(static_cast<std::size_t>(edge_slots(n)), 1));
}

bool is_rainbow_packing(const EdgeColoring& col, const TrianglePacking& p) {
    std::uint64_t seen = 0;
    for (const auto& t : p.triples) {
        std::uint64_t m = vertex_bit(t[0]) | vertex_bit(t[1]) | vertex_bit(t[2]);
        if (std::popcount(m) != 3 || (m & seen))
            throw std::domain_error("is_rainbow_packing: triples are not disjoint");
        seen |= m;
        for (int v : t)
            if (v < 0 || v >= col.vertex_count())
                throw std::domain_error("is_rainbow_packing: vertex out of range");
    }
    std::vector<int> used;
    for (const auto& t : p.triples) {
        used.push_back(col.color(t[0], t[1]));
        used.push_back(col.color(t[0], t[2]));
        used.push_back(col.color(t[1], t[2]));
    }
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

namespace {

bool rainbow_packing_search(const EdgeColoring& col, int k, std::uint64_t unavailable,
                            std::vector<char>& color_used,
                            std::vector<std::array<int, 3>>& acc) {
    int n = col.vertex_count();
    if (static_cast<int>(acc.size()) == k) return true;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (vertex_bit(n) - 1);
    std::uint64_t free = ~unavailable & all;
    if (std::popcount(free) < 3 * (k - static_cast<int>(acc.size()))) return false;
    int v = std::countr_zero(free);
    for (std::uint64_t mu = free & ~(vertex_bit(v) | (vertex_bit(v) - 1)); mu; mu &= mu - 1) {
        int u = std::countr_zero(mu);
        for (std::uint64_t mw = free & ~(vertex_bit(u) | (vertex_bit(u) - 1)); mw; mw &= mw - 1) {
            int w = std::countr_zero(mw);
            int c1 = col.color(v, u), c2 = col.color(v, w), c3 = col.color(u, w);
            if (c1 == c2 || c1 == c3 || c2 == c3) continue;
            if (color_used[static_cast<std::size_t>(c1)] ||
                color_used[static_cast<std::size_t>(c2)] ||
                color_used[static_cast<std::size_t>(c3)])
                continue;
            color_used[static_cast<std::size_t>(c1)] = 1;
            color_used[static_cast<std::size_t>(c2)] = 1;
            color_used[static_cast<std::size_t>(c3)] = 1;
            acc.push_back({v, u, w});
            if (rainbow_packing_search(
                    col, k, unavailable | vertex_bit(v) | vertex_bit(u) | vertex_bit(w),
                    color_used, acc))
                return true;
            acc.pop_back();
            color_used[static_cast<std::size_t>(c1)] = 0;
            color_used[static_cast<std::size_t>(c2)] = 0;
            color_used[static_cast<std::size_t>(c3)] = 0;
        }
    }
    // leave v out of the packing
    return rainbow_packing_search(col, k, unavailable | vertex_bit(v), color_used, acc);
}

}  // namespace

std::optional<TrianglePacking> find_rainbow_triangle_packing(const EdgeColoring& col, int k) {
    if (k < 0) throw std::domain_error("packing size must be nonnegative");
    if (k == 0) return TrianglePacking{};
    if (3 * k > col.vertex_count()) return std::nullopt;
    std::vector<char> color_used(static_cast<std::size_t>(col.color_count()) + 1, 0);
    std::vector<std::array<int, 3>> acc;
    if (rainbow_packing_search(col, k, 0, color_used, acc)) return TrianglePacking{acc};
    return std::nullopt;
}

std::vector<int> saturated_colors(const EdgeColoring& col, int v) {
    if (v < 0 || v >= col.vertex_count()) throw std::domain_error("vertex index out of range");
    int n = col.vertex_count();
    std::vector<char> saturated(static_cast<std::size_t>(col.color_count()) + 1, 1);
    std::vector<char> incident(saturated.size(), 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int c = col.color(a, b);
            if (a == v || b == v)
                incident[static_cast<std::size_t>(c)] = 1;
            else
                saturated[static_cast<std::size_t>(c)] = 0;
        }
    std::vector<int> out;
    for (int c = 1; c <= col.color_count(); ++c)
        if (saturated[static_cast<std::size_t>(c)] && incident[static_cast<std::size_t>(c)])
            out.push_back(c);
    return out;
}

int saturated_degree(const EdgeColoring& col, int v) {
    return static_cast<int>(saturated_colors(col, v).size());
}

SimpleGraph representing_subgraph(const EdgeColoring& col) {
    SimpleGraph g(col.vertex_count());
    std::vector<char> done(static_cast<std::size_t>(col.color_count()) + 1, 0);
    for (auto [u, v] : all_pairs(col.vertex_count())) {
        int c = col.color(u, v);
        if (!done[static_cast<std::size_t>(c)]) {
            done[static_cast<std::size_t>(c)] = 1;
            g.add_edge(u, v);
        }
    }
    return g;
}

SimpleGraph saturated_spanning_subgraph(const EdgeColoring& col) {
    int n = col.vertex_count();
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) {
        for (int c : saturated_colors(col, v)) {
            // least edge of class c incident to v
            for (int u = 0; u < n; ++u) {
                if (u == v) continue;
                if (col.color(std::min(u, v), std::max(u, v)) == c) {
                    g.add_edge(u, v);
                    break;
                }
            }
        }
    }
    return g;
}

bool is_rainbow_subgraph(const EdgeColoring& col, const SimpleGraph& g) {
    std::vector<char> seen(static_cast<std::size_t>(col.color_count()) + 1, 0);
    for (auto [u, v] : g.edges()) {
        int c = col.color(u, v);
        if (seen[static_cast<std::size_t>(c)]) return false;
        seen[static_cast<std::size_t>(c)] = 1;
    }
    return true;
}

std::string coloring_to_json(const EdgeColoring& col) {
    nlohmann::ordered_json j;
    j["n"] = col.vertex_count();
    j["colors"] = nlohmann::json::array();
    for (auto [u, v] : all_pairs(col.vertex_count()))
        j["colors"].push_back({u, v, col.color(u, v)});
    return j.dump();
}

EdgeColoring coloring_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ColoringParseError(ColoringFormatError::bad_structure, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("colors"))
        throw ColoringParseError(ColoringFormatError::bad_structure,
                                 "expected {\"n\": ..., \"colors\": [...]}");
    int n = j["n"].get<int>();
    if (n < 0 || n > kMaxVertices)
        throw ColoringParseError(ColoringFormatError::bad_structure, "n out of range");
    std::vector<int> colors(static_cast<std::size_t>(edge_slots(n)), 0);
    for (const auto& entry : j["colors"]) {
        if (!entry.is_array() || entry.size() != 3)
            throw ColoringParseError(ColoringFormatError::bad_structure,
                                     "color entries must be [u, v, c]");
        int u = entry[0].get<int>(), v = entry[1].get<int>(), c = entry[2].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw ColoringParseError(ColoringFormatError::bad_structure,
                                     "color entry endpoints must satisfy 0 <= u < v < n");
        std::size_t idx = static_cast<std::size_t>(edge_index(n, u, v));
        if (colors[idx] != 0)
            throw ColoringParseError(ColoringFormatError::duplicate_pair,
                                     "pair listed twice");
        if (c < 1)
            throw ColoringParseError(ColoringFormatError::gapped_colors,
                                     "color ids must be positive");
        colors[idx] = c;
    }
    for (int c : colors)
        if (c == 0)
            throw ColoringParseError(ColoringFormatError::missing_pair,
                                     "some pair of K_n has no color");
    return EdgeColoring(n, std::move(colors));
}

}  // namespace rainbow_forge
