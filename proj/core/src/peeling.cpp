#include "sysgraph/peeling.hpp"

#include <stdexcept>

namespace sysgraph {

namespace {

/// Maps an odd cycle of the subgraph induced by `s` back to original ids.
std::vector<int> odd_cycle_within(const Graph& g, const VertexSet& s) {
  InducedGraph sub = induced(g, s);
  auto cycle = shortest_odd_cycle(sub.graph);
  if (!cycle) throw std::logic_error("odd_cycle_within: subgraph is bipartite");
  for (int& v : *cycle) v = sub.vertices[static_cast<std::size_t>(v)];
  return *cycle;
}

/// BFS-layer parity coloring of the radius-`radius` ball reachable in `field`
/// (a bfs/bfs_within result from `center`); throws when some ball edge joins
/// two vertices of one layer (odd cycle witness).
PartialColoring layered_two_coloring(const Graph& g, int center, int radius,
                                     const DistanceField& field) {
  PartialColoring out;
  out.domain = VertexSet(g.order());
  out.colors.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (field.reachable(v) && field[v] <= radius) {
      out.domain.set(v);
      out.colors[static_cast<std::size_t>(v)] = field[v] % 2;
    }
  }
  for (int u = out.domain.first(); u >= 0; u = out.domain.next(u)) {
    VertexSet same = g.neighbors(u);
    same &= out.domain;
    for (int v = same.first(); v >= 0; v = same.next(v)) {
      if (field[u] == field[v])
        throw OddCycleError("ball of radius " + std::to_string(radius) + " around " +
                                std::to_string(center) + " contains an odd cycle",
                            odd_cycle_within(g, out.domain));
    }
  }
  return out;
}

}  // namespace

PartialColoring two_color_ball(const Graph& g, int center, int radius) {
  if (center < 0 || center >= g.order()) throw std::invalid_argument("two_color_ball: bad center");
  if (radius < 0) throw std::invalid_argument("two_color_ball: bad radius");
  return layered_two_coloring(g, center, radius, bfs(g, center));
}

PeelResult ball_peel_coloring(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("ball_peel_coloring: require k >= 1");
  const int n = g.order();
  PeelResult result;
  result.trace.k = k;
  result.coloring.colors.assign(static_cast<std::size_t>(n), -1);

  VertexSet remaining = VertexSet::all(n);
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;

  auto two_color_remaining = [&]() -> bool {
    side.assign(static_cast<std::size_t>(n), -1);
    for (int root = remaining.first(); root >= 0; root = remaining.next(root)) {
      if (side[static_cast<std::size_t>(root)] != -1) continue;
      side[static_cast<std::size_t>(root)] = 0;
      stack.assign(1, root);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        VertexSet nb = g.neighbors(u);
        nb &= remaining;
        for (int v = nb.first(); v >= 0; v = nb.next(v)) {
          if (side[static_cast<std::size_t>(v)] == -1) {
            side[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(u)] ^ 1;
            stack.push_back(v);
          } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
            return false;
          }
        }
      }
    }
    return true;
  };

  while (!two_color_remaining()) {
    // Largest radius-(k-1) ball in the remaining graph, ties toward lowest id.
    int best_center = -1, best_size = -1;
    for (int x = remaining.first(); x >= 0; x = remaining.next(x)) {
      DistanceField field = bfs_within(g, x, remaining);
      int size = 0;
      for (int v = remaining.first(); v >= 0; v = remaining.next(v))
        if (field.reachable(v) && field[v] <= k - 1) ++size;
      if (size > best_size) {
        best_size = size;
        best_center = x;
      }
    }

    DistanceField field = bfs_within(g, best_center, remaining);
    PartialColoring parity = layered_two_coloring(g, best_center, k - 1, field);

    Peel peel;
    peel.center = best_center;
    peel.ball = parity.domain;
    peel.layer.assign(static_cast<std::size_t>(n), -1);
    const int fresh = 2 + static_cast<int>(result.trace.peels.size());
    for (int v = peel.ball.first(); v >= 0; v = peel.ball.next(v)) {
      peel.layer[static_cast<std::size_t>(v)] = field[v];
      // Layers at distance k-1, k-3, ... carry the peel's fresh color; the
      // even-offset layers k-2, k-4, ... share color 0.
      result.coloring.colors[static_cast<std::size_t>(v)] =
          (k - 1 - field[v]) % 2 == 0 ? fresh : 0;
    }
    result.trace.peels.push_back(std::move(peel));
    remaining.subtract(parity.domain);
  }

  for (int v = remaining.first(); v >= 0; v = remaining.next(v))
    result.coloring.colors[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(v)];
  result.trace.remainder = remaining;

  int max_color = -1;
  for (int c : result.coloring.colors) max_color = std::max(max_color, c);
  result.coloring.count = max_color + 1;
  result.trace.total_colors = result.coloring.count;
  return result;
}

namespace {

PeelCheckResult fail(std::string reason, int u = -1, int v = -1) {
  PeelCheckResult r;
  r.ok = false;
  r.reason = std::move(reason);
  r.bad_u = u;
  r.bad_v = v;
  return r;
}

}  // namespace

PeelCheckResult peel_soundness_check(const Graph& g, const PeelTrace& t, const Coloring& c) {
  const int n = g.order();
  if (static_cast<int>(c.colors.size()) != n) return fail("coloring size mismatch");
  VertexSet remaining = VertexSet::all(n);

  for (std::size_t p = 0; p < t.peels.size(); ++p) {
    const Peel& peel = t.peels[p];
    const std::string at = " at peel " + std::to_string(p);
    if (peel.center < 0 || peel.center >= n || !remaining.test(peel.center))
      return fail("peel center not in remaining graph" + at, peel.center);
    if (static_cast<int>(peel.layer.size()) != n) return fail("layer vector size mismatch" + at);

    DistanceField field = bfs_within(g, peel.center, remaining);
    for (int v = 0; v < n; ++v) {
      bool in_ball = remaining.test(v) && field.reachable(v) && field[v] <= t.k - 1;
      if (in_ball != peel.ball.test(v)) return fail("ball membership mismatch" + at, v);
      int expect = in_ball ? field[v] : -1;
      if (peel.layer[static_cast<std::size_t>(v)] != expect)
        return fail("layer is not the BFS distance" + at, v);
    }
    for (int u = peel.ball.first(); u >= 0; u = peel.ball.next(u)) {
      VertexSet nb = g.neighbors(u);
      nb &= remaining;
      for (int v = nb.first(); v >= 0; v = nb.next(v)) {
        if (peel.ball.test(v)) {
          if (field[u] == field[v]) return fail("edge inside one layer" + at, u, v);
        } else if (field[u] <= t.k - 2) {
          return fail("inner-layer vertex has a neighbor outside its ball" + at, u, v);
        }
      }
    }
    remaining.subtract(peel.ball);
  }

  if (!(remaining == t.remainder)) return fail("remainder mismatch");
  for (int v = 0; v < n; ++v)
    if (c.colors[static_cast<std::size_t>(v)] < 0) return fail("uncolored vertex", v);
  for (auto [u, v] : g.edges())
    if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)])
      return fail("monochromatic edge", u, v);
  return {};
}

}  // namespace sysgraph
