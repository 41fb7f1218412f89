#pragma once

#include "sysgraph/graph.hpp"

namespace sysgraph {

Graph gen_path(int n);      // n >= 0
Graph gen_cycle(int n);     // n >= 3
Graph gen_complete(int n);  // n >= 0
Graph gen_petersen();

/// Kneser graph K(ground, subset): vertices are the subset-sized subsets of a
/// ground set, edges join disjoint subsets. Requires 0 < subset <= ground and
/// a vertex count within the order cap. K(5, 2) is the Petersen graph.
Graph gen_kneser(int ground, int subset);

/// Mycielskian on 2n+1 vertices: originals 0..n-1, shadow of v at v+n (joined
/// to the neighbors of v), apex at 2n joined to every shadow.
Graph gen_mycielski(const Graph& g);

/// Generalized Mycielskian with `levels` >= 1 copies of V plus an apex
/// (levels*n + 1 vertices): level 0 induces g, consecutive levels are joined
/// along edges of g, the apex is joined to the last level. levels == 2 is the
/// classic Mycielskian.
Graph gen_general_mycielski(const Graph& g, int levels);

/// Mycielskian of C_5 (11 vertices, chromatic number 4, odd girth 5).
Graph gen_groetzsch();

}  // namespace sysgraph
