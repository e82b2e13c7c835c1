#ifndef RAINBOW_FORGE_RAINBOW_HPP
#define RAINBOW_FORGE_RAINBOW_HPP

#include <optional>
#include <string>
#include <vector>

#include "rainbow_forge/coloring.hpp"

namespace rainbow_forge::rainbow {

/// Least color count at which the structural finder is guaranteed to
/// succeed: one more than the proven upper bound. Requires k >= 2, n >= 3k.
long long guarantee_threshold(long long n, long long k);

struct TraceStep {
    enum class Kind { peel, base_case, structure, augment } kind;
    // peel: vertex (original label) and its saturated degree
    int vertex = -1;
    int saturated_degree = -1;
    // base_case: "sparse-partition" | "exhaustive"
    // structure: "packing" | "tripartition" | "packing-with-remainder" | "exceptional"
    // augment: free-form description of the assembly step
    std::string detail;
};

struct FinderTrace {
    std::vector<TraceStep> steps;
    std::optional<TrianglePacking> result;  // vertices in the input labeling
};

struct FinderOptions {
    // Below this vertex count the structural result is cross-checked against
    // the exhaustive searcher; disagreement throws std::logic_error.
    int cross_check_cutoff = 12;
};

/// Constructive rainbow k-triangle finder mirroring the induction: peel
/// low-saturation vertices, solve the 3k base case via the representing
/// subgraph, otherwise assemble from the structure of the saturated
/// spanning subgraph. Guaranteed to succeed when
/// c(col) >= guarantee_threshold; below that, "none" is legitimate.
FinderTrace find_rainbow_kc3(const EdgeColoring& col, int k, FinderOptions opts = {});

std::string trace_to_json(const FinderTrace& trace);

/// Human-readable rendition of the trace, one line per step.
std::string trace_to_text(const FinderTrace& trace);

}  // namespace rainbow_forge::rainbow

#endif
