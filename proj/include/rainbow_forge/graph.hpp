#ifndef RAINBOW_FORGE_GRAPH_HPP
#define RAINBOW_FORGE_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow_forge {

// Vertex cap: adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

inline std::uint64_t vertex_bit(int v) { return std::uint64_t{1} << v; }

/// Undirected simple graph on labeled vertices 0..n-1, adjacency stored as
/// one bitset row per vertex.
class SimpleGraph {
public:
    SimpleGraph() = default;

    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > kMaxVertices)
            throw std::domain_error("vertex count out of range [0, 64]");
    }

    static SimpleGraph complete(int n) {
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        SimpleGraph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (const auto row : adj_) total += std::popcount(row);
        return total / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj_[static_cast<std::size_t>(u)] & vertex_bit(v)) != 0;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::domain_error("self-loops are not allowed");
        adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
        adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
        adj_[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (vertex_bit(n_) - 1);
    }

    /// Edge list sorted lexicographically, u < v. Canonical serialized order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u) {
            std::uint64_t row = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
            while (row) {
                int v = std::countr_zero(row);
                row &= row - 1;
                out.emplace_back(u, v);
            }
        }
        return out;
    }

    SimpleGraph complement() const {
        SimpleGraph g(n_);
        for (int u = 0; u < n_; ++u)
            g.adj_[static_cast<std::size_t>(u)] =
                ~adj_[static_cast<std::size_t>(u)] & vertex_mask() & ~vertex_bit(u);
        return g;
    }

    /// Induced subgraph on the set bits of `mask`, relabeled 0..popcount-1 in
    /// ascending original order. `out_labels`, when given, receives the
    /// original label of each new vertex.
    SimpleGraph induced(std::uint64_t mask, std::vector<int>* out_labels = nullptr) const;

    bool operator==(const SimpleGraph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::domain_error("vertex index out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> degrees;
};

/// Minimum degree, maximum degree and the per-vertex degree list.
/// Throws std::domain_error on the empty graph.
DegreeStats degree_stats(const SimpleGraph& g);

/// Number of edges with one end in `a` and the other in `b`.
/// The two sets must be disjoint.
int cross_edge_count(const SimpleGraph& g, std::uint64_t a, std::uint64_t b);

/// k pairwise vertex-disjoint triangles of some host graph.
struct TrianglePacking {
    std::vector<std::array<int, 3>> triples;

    int size() const { return static_cast<int>(triples.size()); }

    std::uint64_t vertex_mask() const {
        std::uint64_t m = 0;
        for (const auto& t : triples) m |= vertex_bit(t[0]) | vertex_bit(t[1]) | vertex_bit(t[2]);
        return m;
    }
};

/// Every triple induces a triangle of g and the triples are pairwise disjoint.
bool is_valid_packing(const SimpleGraph& g, const TrianglePacking& p);

/// Exhaustive backtracking search for k vertex-disjoint triangles.
/// An empty optional is a certificate of non-existence. Deterministic:
/// branches on the least not-yet-covered vertex, triangles in lex order.
std::optional<TrianglePacking> find_triangle_packing(const SimpleGraph& g, int k);

/// Enumerates every k-triangle-packing (as an unordered set of triples, each
/// produced once) until the callback returns false.
void for_each_triangle_packing(const SimpleGraph& g, int k,
                               const std::function<bool(const TrianglePacking&)>& visit);

/// Graph isomorphism via degree refinement plus backtracking. Intended for
/// the desk scale this library works at (n <= ~20).
bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

// JSON form: {"n": <int>, "edges": [[u,v], ...]}, u < v, lex-sorted.
std::string graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const std::string& text);

}  // namespace rainbow_forge

#endif
