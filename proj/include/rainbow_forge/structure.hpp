#ifndef RAINBOW_FORGE_STRUCTURE_HPP
#define RAINBOW_FORGE_STRUCTURE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rainbow_forge/graph.hpp"

namespace rainbow_forge::structure {

/// Raised when an exhaustive search contradicts a structural guarantee the
/// caller asserted. Never expected on valid inputs; a test failure if seen.
class LemmaViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Partition of 3k vertices into k independent triples.
struct EquitablePartition {
    std::vector<std::array<int, 3>> parts;
};

bool is_valid_equitable_partition(const SimpleGraph& g, const EquitablePartition& p);

/// Extremal structure: small part v1 (size k-1) completely joined to two
/// equal independent parts v2, v3 that are also completely joined to each
/// other.
struct Tripartition {
    std::vector<int> v1, v2, v3;
};

bool is_valid_tripartition(const SimpleGraph& g, const Tripartition& t);

/// A (k-1)-packing on 3k-3 vertices whose removal leaves a complete
/// bipartite graph with both sides of size >= 2.
struct PackingWithRemainder {
    TrianglePacking core;
    std::vector<int> side_a, side_b;
};

bool is_valid_packing_with_remainder(const SimpleGraph& g, const PackingWithRemainder& c);

struct ExceptionalOutlier {};  // the graph is isomorphic to the 10-vertex fixture

using StructureCertificate =
    std::variant<TrianglePacking, Tripartition, PackingWithRemainder, ExceptionalOutlier>;

std::string certificate_to_json(const StructureCertificate& cert);

/// Exhaustive backtracking over unordered partitions of the 3k vertices into
/// independent triples; empty optional certifies non-existence.
/// Requires v(g) = 3k.
std::optional<EquitablePartition> equitable_independent_partition(const SimpleGraph& g, int k);

/// Guaranteed partition for sparse graphs: v(g) = 3k, e(g) <= 3k-3, k >= 4.
/// Search exhaustion throws LemmaViolation.
EquitablePartition check_sparse_partition_lemma(const SimpleGraph& g, int k);

/// Guaranteed partition under the max-degree bound: v(g) = 3k,
/// max degree <= k-1. Search exhaustion throws LemmaViolation.
EquitablePartition check_hajnal_szemeredi(const SimpleGraph& g, int k);

enum class MergeOutcome { two_triangles, exception_pattern, none };

struct PathTriangleMergeResult {
    MergeOutcome outcome = MergeOutcome::none;
    std::optional<TrianglePacking> packing;  // set iff two_triangles
};

/// Input: graph on 6 vertices with path 0-1-2 and triangle 3,4,5 present.
/// Searches for two disjoint triangles; when none exist but the path ends
/// both see exactly the same 2 triangle vertices and the middle sees all 3,
/// reports the exceptional pattern.
PathTriangleMergeResult merge_path_triangle(const SimpleGraph& g);

/// Input: graph on 7 vertices with matching edges 0-1, 2-3 and triangle
/// 4,5,6 present. Exhaustive search for two disjoint triangles; >= 9 cross
/// edges guarantees success.
std::optional<TrianglePacking> merge_matching_triangle(const SimpleGraph& g);

/// Packing guaranteed by the minimum-degree condition delta >= (n+k)/2.
/// Requires n >= 3k; exhaustion throws LemmaViolation.
TrianglePacking dirac_packing(const SimpleGraph& g, int k);

/// Structure extractor for delta >= (n+k-1)/2: a k-packing if one exists,
/// else a tripartition with |v1| = k-1, else isomorphism to the 10-vertex
/// exceptional fixture. Requires n >= 3k; total failure throws.
StructureCertificate lemma9_structure(const SimpleGraph& g, int k);

/// Structure extractor for delta >= (n+k-2)/2 when a (k-1)-packing exists:
/// a k-packing if one exists, else a (k-1)-packing whose removal leaves a
/// complete bipartite remainder with both sides >= 2.
/// Requires n >= 3k+1; total failure throws.
StructureCertificate lemma10_structure(const SimpleGraph& g, int k);

}  // namespace rainbow_forge::structure

#endif
