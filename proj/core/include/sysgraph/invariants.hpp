#pragma once

#include <atomic>
#include <optional>
#include <vector>

#include "sysgraph/graph.hpp"

namespace sysgraph {

/// Optional cooperative cancellation for the exponential searches. The flag is
/// polled periodically; a set flag aborts the search by throwing.
struct SearchLimits {
  const std::atomic<bool>* cancel = nullptr;
};

struct SearchCancelled : std::runtime_error {
  SearchCancelled() : std::runtime_error("search cancelled") {}
};

/// Total vertex coloring; colors[v] is a 0-based color index, count the size
/// of the palette (1 + largest color used).
struct Coloring {
  std::vector<int> colors;
  int count = 0;
};

/// True iff every vertex has a color and every edge is bichromatic.
bool verify_coloring(const Graph& g, const Coloring& c);

/// Exact: a proper m-coloring if one exists, nullopt otherwise. Deterministic
/// (saturation-ordered backtracking with color symmetry breaking).
std::optional<Coloring> is_m_colorable(const Graph& g, int m, const SearchLimits& limits = {});

/// Exact chromatic number (0 for the empty graph). Branch-and-bound between a
/// greedy clique lower bound and a greedy upper bound.
int chromatic_number(const Graph& g, const SearchLimits& limits = {});

enum class PartRule { Bipartite, Forest };

/// Witness partition into the minimum number of parts whose induced subgraphs
/// satisfy the part rule; n is that minimum minus one.
struct EssentialityResult {
  std::vector<VertexSet> parts;
  int n = 0;
  PartRule rule = PartRule::Bipartite;
};

/// Minimum partition of V into parts each inducing a bipartite subgraph, found
/// by direct search with per-part bipartiteness pruning (part count increasing
/// from 1). The empty graph yields zero parts.
EssentialityResult essentiality(const Graph& g, const SearchLimits& limits = {});

/// Same search with parts required to induce forests (vertex arboricity).
EssentialityResult forest_essentiality(const Graph& g, const SearchLimits& limits = {});

/// True iff the preimage of the subgraph induced by `subset` under the parity
/// double cover is a trivial cover, i.e. the preimage has exactly twice as many
/// components as the subgraph. Coincides with bipartiteness of the subgraph.
bool pi_inessential(const Graph& g, const VertexSet& subset);

/// Largest r such that every ball B(x, r) induces a bipartite subgraph;
/// nullopt (unbounded) exactly when g is bipartite.
std::optional<int> triviality_radius(const Graph& g);

/// d(X, r): maximum ball size at radius r and its center (lowest id on ties).
struct BallMax {
  int size = 0;
  int center = -1;
};
BallMax max_ball_size(const Graph& g, int r);

}  // namespace sysgraph
