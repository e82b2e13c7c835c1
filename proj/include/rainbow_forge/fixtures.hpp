#ifndef RAINBOW_FORGE_FIXTURES_HPP
#define RAINBOW_FORGE_FIXTURES_HPP

#include "rainbow_forge/graph.hpp"

namespace rainbow_forge::fixtures {

/// The exceptional 10-vertex, 6-regular graph: it meets the tripartition
/// lemma's degree bound with k=3 and holds two disjoint triangles but not
/// three, yet admits no tripartition.
SimpleGraph exceptional_graph();

/// Cross-edge patterns between a matching {ab, cd} (vertices 0..3, edges
/// 01 and 23) and a triangle on 4,5,6 that carry 8 cross edges without two
/// disjoint triangles. `which` in {1,2,3}.
SimpleGraph blocked_matching_pattern(int which);

/// K_{3,3} (sides 0,1,2 and 3,4,5) plus the triangle on 0,1,2: the 12-edge
/// representing subgraph of the tight 6-vertex base case.
SimpleGraph base_case_k2_graph();

/// The three candidate rainbow 2-packings for base_case_k2_graph; at least
/// one is rainbow no matter how the three missing pairs repeat colors.
std::vector<TrianglePacking> base_case_k2_packings();

/// 9-vertex base-case graphs: K_9 minus a 3-edge star at vertex 0 and minus
/// a triangle, where `overlap` in {0,1,2,3} is the number of star endpoints
/// shared with the triangle.
SimpleGraph base_case_k3_graph(int overlap);

/// For overlap == 3: three candidate rainbow 3-packings, at least one of
/// which survives any repeat-coloring of the six missing pairs.
std::vector<TrianglePacking> base_case_k3_packings();

}  // namespace rainbow_forge::fixtures

#endif
