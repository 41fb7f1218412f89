#pragma once

#include <string>
#include <vector>

#include "sysgraph/graph.hpp"
#include "sysgraph/invariants.hpp"

namespace sysgraph {

/// Thrown when a ball or graph expected to be short-odd-cycle-free contains an
/// odd cycle; carries the witness (a shortest such cycle, vertex sequence).
struct OddCycleError : std::runtime_error {
  std::vector<int> cycle;
  OddCycleError(const std::string& msg, std::vector<int> c)
      : std::runtime_error(msg), cycle(std::move(c)) {}
};

/// Coloring defined on a vertex subset; colors[v] = -1 outside the domain.
struct PartialColoring {
  VertexSet domain;
  std::vector<int> colors;
};

/// 2-colors the subgraph induced by B(center, radius) by BFS-layer parity.
/// Requires the ball to induce a bipartite subgraph (guaranteed when the odd
/// girth is >= 2*radius + 3); otherwise throws OddCycleError with a shortest
/// odd cycle inside the ball.
PartialColoring two_color_ball(const Graph& g, int center, int radius);

/// One peeling step: the ball removed, its center, and the BFS layer of every
/// ball vertex in the graph current at peel time (-1 outside the ball).
struct Peel {
  int center = -1;
  VertexSet ball;
  std::vector<int> layer;
};

/// Full trace of the peeling run: radius k-1 balls peeled in order until the
/// remainder went bipartite.
struct PeelTrace {
  int k = 0;
  std::vector<Peel> peels;
  VertexSet remainder;
  int total_colors = 0;
};

struct PeelResult {
  Coloring coloring;
  PeelTrace trace;
};

/// Constructive coloring for graphs with odd girth >= 2k+1: repeatedly peel a
/// largest radius-(k-1) ball (ties toward the lowest center id), giving its
/// layers at distance k-1, k-3, ... a color unique to the peel and layers at
/// distance k-2, k-4, ... the shared color 0; finally 2-color the bipartite
/// remainder with {0, 1}. Uses at most (number of peels) + 2 colors. Throws
/// OddCycleError (witness cycle of length <= 2k-1) when the precondition
/// fails; k >= 1 required.
PeelResult ball_peel_coloring(const Graph& g, int k);

struct PeelCheckResult {
  bool ok = true;
  std::string reason;
  int bad_u = -1;
  int bad_v = -1;
};

/// Independently re-verifies a peeling run against the graph: replays the
/// peels and checks that (i) recorded layers are the BFS layers current at
/// peel time and no ball edge joins two vertices of one layer, (ii) vertices
/// of layers <= k-2 have no neighbors outside their ball at peel time,
/// (iii) the remainder matches and the final coloring is proper. Returns a
/// counterexample edge on failure.
PeelCheckResult peel_soundness_check(const Graph& g, const PeelTrace& t, const Coloring& c);

}  // namespace sysgraph
