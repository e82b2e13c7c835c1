#ifndef RAINBOW_FORGE_COLORING_HPP
#define RAINBOW_FORGE_COLORING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow_forge/graph.hpp"

namespace rainbow_forge {

/// Position of the pair {u,v}, u < v, in the lex-ordered edge list of K_n.
inline int edge_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 3) / 2 + v - 1;
}

inline int edge_slots(int n) { return n * (n - 1) / 2; }

/// Lex-ordered list of the C(n,2) pairs of K_n; entry i is the pair with
/// edge_index i.
std::vector<std::pair<int, int>> all_pairs(int n);

enum class ColoringFormatError {
    bad_structure,
    missing_pair,
    duplicate_pair,
    gapped_colors,
};

class ColoringParseError : public std::runtime_error {
public:
    ColoringParseError(ColoringFormatError code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ColoringFormatError code() const { return code_; }

private:
    ColoringFormatError code_;
};

/// Total edge-coloring of K_n. Color ids are contiguous 1..c and surjective.
class EdgeColoring {
public:
    /// `colors` is indexed by edge_index; validates contiguity/surjectivity.
    EdgeColoring(int n, std::vector<int> colors);

    int vertex_count() const { return n_; }
    int color_count() const { return color_count_; }

    int color(int u, int v) const { return colors_[static_cast<std::size_t>(edge_index(n_, u, v))]; }
    const std::vector<int>& raw() const { return colors_; }

    /// Edges of each class, 1-based by color id, each list lex-sorted.
    std::vector<std::vector<std::pair<int, int>>> color_classes() const;

    /// Restriction to K_{n-1}: vertex v removed, higher labels shifted down,
    /// surviving classes rank-compressed to contiguous ids.
    EdgeColoring delete_vertex(int v) const;

    bool operator==(const EdgeColoring& other) const = default;

private:
    int n_;
    int color_count_;
    std::vector<int> colors_;
};

inline int color_count(const EdgeColoring& col) { return col.color_count(); }

EdgeColoring rainbow_complete(int n);
EdgeColoring monochromatic_complete(int n);

/// True iff the 3k edges spanned by p carry 3k distinct colors.
/// Overlapping triples are a domain error.
bool is_rainbow_packing(const EdgeColoring& col, const TrianglePacking& p);

/// Exhaustive backtracking over disjoint triangles of K_n with a running
/// distinct-color set; empty optional is a certificate of non-existence.
std::optional<TrianglePacking> find_rainbow_triangle_packing(const EdgeColoring& col, int k);

/// Color ids whose entire edge class is incident to v.
std::vector<int> saturated_colors(const EdgeColoring& col, int v);

/// Number of colors saturated by v; equals c(G) - c(G - v).
int saturated_degree(const EdgeColoring& col, int v);

/// One edge per color class, the lexicographically least of each.
SimpleGraph representing_subgraph(const EdgeColoring& col);

/// Spanning subgraph H where each vertex contributes the least incident edge
/// of every color it saturates. H is rainbow and d_H(v) >= d^s(v).
SimpleGraph saturated_spanning_subgraph(const EdgeColoring& col);

/// True iff no color appears on two distinct edges of g.
bool is_rainbow_subgraph(const EdgeColoring& col, const SimpleGraph& g);

// JSON form: {"n": <int>, "colors": [[u, v, c], ...]} sorted by (u, v).
std::string coloring_to_json(const EdgeColoring& col);
EdgeColoring coloring_from_json(const std::string& text);

}  // namespace rainbow_forge

#endif
