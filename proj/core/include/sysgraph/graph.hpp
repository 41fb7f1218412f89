#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sysgraph {

/// Set of vertex ids backed by a fixed-width bitset sized to the host graph.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  }

  int universe() const { return n_; }

  bool test(int v) const { return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const;
  bool empty() const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  /// Removes every element of `o` from this set.
  VertexSet& subtract(const VertexSet& o);
  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  bool operator==(const VertexSet&) const = default;

  /// Lowest element, or -1 when empty.
  int first() const;
  /// Next element strictly above `v`, or -1.
  int next(int v) const;

  std::vector<int> to_vector() const;

  static VertexSet all(int universe);

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Simple undirected graph on vertices 0..n-1, adjacency as one bitset row per
/// vertex. No self-loops, no multi-edges. Rows are kept symmetric by add_edge.
class Graph {
public:
  static constexpr int max_order = 1 << 20;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  std::size_t edge_count() const;

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

  /// Throws on out-of-range ids or self-loops; adding an existing edge is a no-op.
  void add_edge(int u, int v);

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Per-vertex distances from one source; -1 marks vertices no path reaches.
struct DistanceField {
  int source = -1;
  std::vector<int> dist;

  bool reachable(int v) const { return dist[static_cast<std::size_t>(v)] >= 0; }
  int operator[](int v) const { return dist[static_cast<std::size_t>(v)]; }
};

DistanceField bfs(const Graph& g, int source);
/// BFS restricted to the subgraph induced by `allowed`; `source` must be in it.
DistanceField bfs_within(const Graph& g, int source, const VertexSet& allowed);

/// Closed metric ball B(x, r) = { v : d(x, v) <= r }.
VertexSet ball(const Graph& g, int x, int r);
/// Sphere S(x, r) = { v : d(x, v) = r }.
VertexSet sphere(const Graph& g, int x, int r);

/// Ball sizes |B(center, i)| for i = 0..sizes.size()-1; the last entry is the
/// size of the center's component (the profile is reported up to stabilization).
struct BallProfile {
  int center = -1;
  std::vector<int> sizes;
};
BallProfile ball_profile(const Graph& g, int center);

/// Subgraph induced by `s`, with vertices[i] giving the original id of new id i
/// (ascending order).
struct InducedGraph {
  Graph graph;
  std::vector<int> vertices;
};
InducedGraph induced(const Graph& g, const VertexSet& s);

int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// When not bipartite, odd_walk holds a closed odd walk w_0, ..., w_L with
/// w_0 == w_L and L odd (consecutive entries adjacent). When bipartite, side[v]
/// is a valid 2-coloring (isolated vertices on side 0).
struct BipartiteResult {
  bool bipartite = true;
  std::vector<std::int8_t> side;
  std::vector<int> odd_walk;
};
BipartiteResult is_bipartite(const Graph& g);

/// Length of a shortest cycle; nullopt when the graph is a forest.
std::optional<int> girth(const Graph& g);

/// Length of a shortest odd cycle; nullopt exactly when the graph is bipartite.
/// Computed as the minimum over vertices v of the distance between the two
/// lifts of v in the bipartite double cover.
std::optional<int> odd_girth(const Graph& g);

/// Same value as odd_girth, computed by a direct BFS over (vertex, parity)
/// states without materializing the cover. Kept as an independent cross-check.
std::optional<int> odd_girth_parity(const Graph& g);

/// A shortest odd cycle as a vertex sequence c_0..c_{L-1} (L odd, consecutive
/// entries adjacent, c_{L-1} adjacent to c_0, all distinct); nullopt when
/// bipartite. Deterministic for a fixed input.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g);

/// Bipartite double cover on 2n vertices: lift (v, 0) -> v, (v, 1) -> v + n;
/// each edge uv yields u~(v+n) and (u+n)~v.
Graph double_cover(const Graph& g);

/// Canonical form for isomorphism testing: the graph6 string of the relabeling
/// that maximizes the adjacency bit sequence. Two graphs are isomorphic iff
/// their canonical forms are equal. Requires order <= 12.
std::string canonical_form(const Graph& g);

}  // namespace sysgraph
