#include "rainbow_forge/rainbow.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "rainbow_forge/bounds.hpp"
#include "rainbow_forge/structure.hpp"

namespace rainbow_forge::rainbow {

long long guarantee_threshold(long long n, long long k) {
    if (k < 2 || n < 3 * k)
        throw std::domain_error("guarantee_threshold: requires k >= 2, n >= 3k");
    return bounds::upper_bound(n, k) + 1;
}

namespace {

using structure::PackingWithRemainder;
using structure::Tripartition;

TrianglePacking relabel(const TrianglePacking& p, const std::vector<int>& labels) {
    TrianglePacking out;
    for (const auto& t : p.triples)
        out.triples.push_back({labels[static_cast<std::size_t>(t[0])],
                               labels[static_cast<std::size_t>(t[1])],
                               labels[static_cast<std::size_t>(t[2])]});
    return out;
}

std::vector<char> color_set_of(const EdgeColoring& col, const SimpleGraph& g) {
    std::vector<char> in(static_cast<std::size_t>(col.color_count()) + 1, 0);
    for (auto [u, v] : g.edges()) in[static_cast<std::size_t>(col.color(u, v))] = 1;
    return in;
}

// Branch for the tripartition structure: two triangles through edges inside
// the independent sides whose colors lie outside C(H), plus a rainbow
// (k-2)-packing inside H on the remaining vertices.
std::optional<TrianglePacking> assemble_from_tripartition(const EdgeColoring& col,
                                                          const SimpleGraph& h,
                                                          const Tripartition& tri, int k) {
    auto in_h = color_set_of(col, h);
    std::vector<std::pair<int, int>> fresh;  // side-internal pairs with new colors
    auto collect = [&](const std::vector<int>& side) {
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j) {
                int u = std::min(side[i], side[j]), v = std::max(side[i], side[j]);
                if (!in_h[static_cast<std::size_t>(col.color(u, v))]) fresh.emplace_back(u, v);
            }
    };
    collect(tri.v2);
    collect(tri.v3);

    for (std::size_t i = 0; i < fresh.size(); ++i)
        for (std::size_t j = i + 1; j < fresh.size(); ++j) {
            auto [x1, y1] = fresh[i];
            auto [x2, y2] = fresh[j];
            int c1 = col.color(x1, y1), c2 = col.color(x2, y2);
            if (c1 == c2) continue;
            std::uint64_t ends = vertex_bit(x1) | vertex_bit(y1) | vertex_bit(x2) | vertex_bit(y2);
            if (std::popcount(ends) != 4) continue;
            std::uint64_t apex1 = h.neighbors(x1) & h.neighbors(y1) & ~ends;
            for (std::uint64_t mz1 = apex1; mz1; mz1 &= mz1 - 1) {
                int z1 = std::countr_zero(mz1);
                std::uint64_t apex2 =
                    h.neighbors(x2) & h.neighbors(y2) & ~ends & ~vertex_bit(z1);
                for (std::uint64_t mz2 = apex2; mz2; mz2 &= mz2 - 1) {
                    int z2 = std::countr_zero(mz2);
                    std::uint64_t used = ends | vertex_bit(z1) | vertex_bit(z2);
                    SimpleGraph rest_h;
                    std::vector<int> rest_labels;
                    rest_h = h.induced(h.vertex_mask() & ~used, &rest_labels);
                    auto core = find_triangle_packing(rest_h, k - 2);
                    if (!core) continue;
                    TrianglePacking full = relabel(*core, rest_labels);
                    full.triples.push_back({x1, y1, z1});
                    full.triples.push_back({x2, y2, z2});
                    if (is_rainbow_packing(col, full)) return full;
                }
            }
        }
    return std::nullopt;
}

// Branch for the packing-plus-bipartite-remainder structure: one triangle
// through a side-internal edge and two cross edges of H, joined with the
// (k-1)-packing core.
std::optional<TrianglePacking> assemble_from_remainder(const EdgeColoring& col,
                                                       const SimpleGraph& h,
                                                       const PackingWithRemainder& pwr, int k) {
    (void)k;
    std::vector<char> used_colors(static_cast<std::size_t>(col.color_count()) + 1, 0);
    for (const auto& t : pwr.core.triples) {
        used_colors[static_cast<std::size_t>(col.color(t[0], t[1]))] = 1;
        used_colors[static_cast<std::size_t>(col.color(t[0], t[2]))] = 1;
        used_colors[static_cast<std::size_t>(col.color(t[1], t[2]))] = 1;
    }
    auto try_side = [&](const std::vector<int>& side,
                        const std::vector<int>& other) -> std::optional<TrianglePacking> {
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j) {
                int x = std::min(side[i], side[j]), y = std::max(side[i], side[j]);
                int cxy = col.color(x, y);
                if (used_colors[static_cast<std::size_t>(cxy)]) continue;
                for (int z : other) {
                    if (!h.has_edge(x, z) || !h.has_edge(y, z)) continue;
                    int cxz = col.color(std::min(x, z), std::max(x, z));
                    int cyz = col.color(std::min(y, z), std::max(y, z));
                    if (cxz == cyz || cxz == cxy || cyz == cxy) continue;
                    if (used_colors[static_cast<std::size_t>(cxz)] ||
                        used_colors[static_cast<std::size_t>(cyz)])
                        continue;
                    TrianglePacking full = pwr.core;
                    full.triples.push_back({x, y, z});
                    if (is_rainbow_packing(col, full)) return full;
                }
            }
        return std::nullopt;
    };
    if (auto p = try_side(pwr.side_a, pwr.side_b)) return p;
    return try_side(pwr.side_b, pwr.side_a);
}

struct Solver {
    const FinderOptions opts;
    FinderTrace trace;

    std::optional<TrianglePacking> solve(const EdgeColoring& col, std::vector<int> labels,
                                         int k) {
        int n = col.vertex_count();
        if (n < 3 * k) return std::nullopt;
        if (n == 3 * k) return base_case(col, labels, k);

        auto region = bounds::classify(n, k);
        int bound = region == bounds::Region::mid ? (n + k - 3) / 2 : (n + k - 2) / 2;

        int peel = -1, peel_ds = -1;
        for (int v = 0; v < n; ++v) {
            int ds = saturated_degree(col, v);
            if (peel < 0 || ds < peel_ds) {
                peel = v;
                peel_ds = ds;
            }
        }
        if (peel_ds <= bound) {
            EdgeColoring reduced = col.delete_vertex(peel);
            if (reduced.color_count() != col.color_count() - peel_ds)
                throw std::logic_error("peel identity c(G-u) = c(G) - d^s(u) violated");
            TraceStep step{TraceStep::Kind::peel, labels[static_cast<std::size_t>(peel)],
                           peel_ds,
                           region == bounds::Region::mid ? "mid-bound" : "stable-bound"};
            trace.steps.push_back(step);
            labels.erase(labels.begin() + peel);
            return solve(reduced, std::move(labels), k);
        }
        return structural_case(col, labels, k);
    }

    std::optional<TrianglePacking> base_case(const EdgeColoring& col,
                                             const std::vector<int>& labels, int k) {
        SimpleGraph rep = representing_subgraph(col);
        SimpleGraph co = rep.complement();
        if (k >= 4 && co.edge_count() <= 3 * k - 3) {
            auto part = structure::check_sparse_partition_lemma(co, k);
            trace.steps.push_back({TraceStep::Kind::base_case, -1, -1, "sparse-partition"});
            TrianglePacking p;
            for (const auto& t : part.parts) p.triples.push_back(t);
            return relabel(p, labels);
        }
        trace.steps.push_back({TraceStep::Kind::base_case, -1, -1, "exhaustive"});
        auto p = find_rainbow_triangle_packing(col, k);
        if (!p) return std::nullopt;
        return relabel(*p, labels);
    }

    std::optional<TrianglePacking> structural_case(const EdgeColoring& col,
                                                   const std::vector<int>& labels, int k) {
        int n = col.vertex_count();
        SimpleGraph h = saturated_spanning_subgraph(col);
        if (auto p = find_triangle_packing(h, k)) {
            trace.steps.push_back({TraceStep::Kind::structure, -1, -1, "packing"});
            return relabel(*p, labels);  // rainbow: every edge lies in the rainbow subgraph H
        }
        int min_deg = degree_stats(h).min_degree;
        bool has_core = find_triangle_packing(h, k - 1).has_value();
        if (2 * min_deg >= n + k - 2) {
            if (has_core && n >= 3 * k + 1) {
                auto cert = structure::lemma10_structure(h, k);
                if (const auto* pwr = std::get_if<PackingWithRemainder>(&cert)) {
                    trace.steps.push_back(
                        {TraceStep::Kind::structure, -1, -1, "packing-with-remainder"});
                    if (auto p = assemble_from_remainder(col, h, *pwr, k)) {
                        trace.steps.push_back({TraceStep::Kind::augment, -1, -1,
                                               "side-edge triangle joined with core packing"});
                        return relabel(*p, labels);
                    }
                }
            } else if (!has_core) {
                auto cert = structure::lemma9_structure(h, k - 1);
                if (const auto* tri = std::get_if<Tripartition>(&cert)) {
                    trace.steps.push_back({TraceStep::Kind::structure, -1, -1, "tripartition"});
                    if (auto p = assemble_from_tripartition(col, h, *tri, k)) {
                        trace.steps.push_back(
                            {TraceStep::Kind::augment, -1, -1,
                             "two fresh-color side edges plus packing inside the join"});
                        return relabel(*p, labels);
                    }
                } else if (std::holds_alternative<structure::ExceptionalOutlier>(cert)) {
                    trace.steps.push_back({TraceStep::Kind::structure, -1, -1, "exceptional"});
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace

FinderTrace find_rainbow_kc3(const EdgeColoring& col, int k, FinderOptions opts) {
    if (k < 2) throw std::domain_error("find_rainbow_kc3: requires k >= 2");
    int n = col.vertex_count();
    Solver solver{opts, {}};
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v;
    auto result = solver.solve(col, labels, k);
    FinderTrace trace = std::move(solver.trace);

    if (result && !is_rainbow_packing(col, *result))
        throw std::logic_error("finder produced a non-rainbow packing");

    if (!result && n <= opts.cross_check_cutoff) {
        // Structural pipeline came up empty; the exhaustive searcher is the
        // oracle of record at this scale.
        auto exhaustive = find_rainbow_triangle_packing(col, k);
        if (exhaustive) {
            trace.steps.push_back(
                {TraceStep::Kind::augment, -1, -1, "exhaustive-search fallback"});
            result = exhaustive;
        }
    }
    if (!result && n >= 3 * k && col.color_count() >= guarantee_threshold(n, k) &&
        n > opts.cross_check_cutoff)
        throw std::logic_error("finder failed above the guarantee threshold");
    trace.result = std::move(result);
    return trace;
}

std::string trace_to_json(const FinderTrace& trace) {
    nlohmann::ordered_json j;
    j["steps"] = nlohmann::json::array();
    for (const auto& s : trace.steps) {
        nlohmann::ordered_json step;
        switch (s.kind) {
            case TraceStep::Kind::peel:
                step["kind"] = "peel";
                step["vertex"] = s.vertex;
                step["saturated_degree"] = s.saturated_degree;
                break;
            case TraceStep::Kind::base_case: step["kind"] = "base-case"; break;
            case TraceStep::Kind::structure: step["kind"] = "structure"; break;
            case TraceStep::Kind::augment: step["kind"] = "augment"; break;
        }
        if (!s.detail.empty()) step["detail"] = s.detail;
        j["steps"].push_back(step);
    }
    if (trace.result) {
        j["packing"] = nlohmann::json::array();
        for (const auto& t : trace.result->triples) j["packing"].push_back({t[0], t[1], t[2]});
    } else {
        j["packing"] = nullptr;
    }
    return j.dump();
}

std::string trace_to_text(const FinderTrace& trace) {
    std::ostringstream out;
    for (const auto& s : trace.steps) {
        switch (s.kind) {
            case TraceStep::Kind::peel:
                out << "peel vertex " << s.vertex << " (saturated degree " << s.saturated_degree
                    << ", " << s.detail << ")\n";
                break;
            case TraceStep::Kind::base_case: out << "base case: " << s.detail << "\n"; break;
            case TraceStep::Kind::structure: out << "structure: " << s.detail << "\n"; break;
            case TraceStep::Kind::augment: out << "augment: " << s.detail << "\n"; break;
        }
    }
    if (trace.result) {
        out << "rainbow packing:";
        for (const auto& t : trace.result->triples)
            out << " {" << t[0] << "," << t[1] << "," << t[2] << "}";
        out << "\n";
    } else {
        out << "no rainbow packing found\n";
    }
    return out.str();
}

}  // namespace rainbow_forge::rainbow
