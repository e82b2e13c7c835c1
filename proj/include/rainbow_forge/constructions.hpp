#ifndef RAINBOW_FORGE_CONSTRUCTIONS_HPP
#define RAINBOW_FORGE_CONSTRUCTIONS_HPP

#include "rainbow_forge/coloring.hpp"

namespace rainbow_forge {

/// Extremal coloring: vertices 0..3k-2 form a rainbow clique; each later
/// vertex i contributes one fresh color shared by all its back edges.
/// Color count: C(3k-1,2) + n - 3k + 1. Requires k >= 2, n >= 3k.
EdgeColoring clique_plus_pendant_coloring(int n, int k);

/// Extremal coloring: apexes 0..k-3, side S of size floor((n-k+2)/2), then
/// side T; all apex-apex, apex-side and S-T edges rainbow in lex order, all
/// edges inside S and inside T share one final extra color.
/// Color count: floor((n-k+2)^2/4) + (k-2)(n-k+2) + C(k-2,2) + 1.
/// Requires k >= 2, n >= 3k.
EdgeColoring bipartite_join_coloring(int n, int k);

}  // namespace rainbow_forge

#endif
