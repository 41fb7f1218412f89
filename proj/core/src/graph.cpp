#include "sysgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <array>

#include "sysgraph/graph6.hpp"

namespace sysgraph {

int VertexSet::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

int VertexSet::next(int v) const {
  ++v;
  if (v < 0 || v >= n_) return -1;
  std::size_t i = static_cast<std::size_t>(v) >> 6;
  std::uint64_t w = w_[i] >> (v & 63);
  if (w) return v + std::countr_zero(w);
  for (++i; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
  return out;
}

VertexSet VertexSet::all(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.set(v);
  return s;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_order) throw std::invalid_argument("Graph: order out of range");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += static_cast<std::size_t>(row.count());
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("add_edge: vertex id");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  adj_[static_cast<std::size_t>(u)].set(v);
  adj_[static_cast<std::size_t>(v)].set(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
         v = adj_[static_cast<std::size_t>(u)].next(v))
      out.emplace_back(u, v);
  return out;
}

DistanceField bfs_within(const Graph& g, int source, const VertexSet& allowed) {
  const int n = g.order();
  if (source < 0 || source >= n) throw std::out_of_range("bfs: source");
  if (!allowed.test(source)) throw std::invalid_argument("bfs_within: source not allowed");
  DistanceField f;
  f.source = source;
  f.dist.assign(static_cast<std::size_t>(n), -1);
  f.dist[static_cast<std::size_t>(source)] = 0;
  VertexSet frontier(n), visited(n);
  frontier.set(source);
  visited.set(source);
  int d = 0;
  while (!frontier.empty()) {
    VertexSet next(n);
    for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= g.neighbors(v);
    next &= allowed;
    next.subtract(visited);
    ++d;
    for (int v = next.first(); v >= 0; v = next.next(v)) f.dist[static_cast<std::size_t>(v)] = d;
    visited |= next;
    frontier = std::move(next);
  }
  return f;
}

DistanceField bfs(const Graph& g, int source) {
  return bfs_within(g, source, VertexSet::all(g.order()));
}

VertexSet ball(const Graph& g, int x, int r) {
  if (r < 0) throw std::invalid_argument("ball: negative radius");
  DistanceField f = bfs(g, x);
  VertexSet s(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (f.reachable(v) && f[v] <= r) s.set(v);
  return s;
}

VertexSet sphere(const Graph& g, int x, int r) {
  if (r < 0) throw std::invalid_argument("sphere: negative radius");
  DistanceField f = bfs(g, x);
  VertexSet s(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (f.reachable(v) && f[v] == r) s.set(v);
  return s;
}

BallProfile ball_profile(const Graph& g, int center) {
  DistanceField f = bfs(g, center);
  int ecc = 0;
  for (int v = 0; v < g.order(); ++v) ecc = std::max(ecc, f[v]);
  BallProfile p;
  p.center = center;
  p.sizes.assign(static_cast<std::size_t>(ecc) + 1, 0);
  for (int v = 0; v < g.order(); ++v)
    if (f.reachable(v)) p.sizes[static_cast<std::size_t>(f[v])] += 1;
  for (std::size_t i = 1; i < p.sizes.size(); ++i) p.sizes[i] += p.sizes[i - 1];
  return p;
}

InducedGraph induced(const Graph& g, const VertexSet& s) {
  InducedGraph out;
  out.vertices = s.to_vector();
  const int m = static_cast<int>(out.vertices.size());
  std::vector<int> back(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) back[static_cast<std::size_t>(out.vertices[i])] = i;
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i) {
    VertexSet nb = g.neighbors(out.vertices[static_cast<std::size_t>(i)]);
    nb &= s;
    for (int v = nb.first(); v >= 0; v = nb.next(v)) {
      int j = back[static_cast<std::size_t>(v)];
      if (j > i) out.graph.add_edge(i, j);
    }
  }
  return out;
}

int component_count(const Graph& g) {
  const int n = g.order();
  VertexSet seen(n);
  int components = 0;
  for (int v = 0; v < n; ++v) {
    if (seen.test(v)) continue;
    ++components;
    DistanceField f = bfs(g, v);
    for (int u = 0; u < n; ++u)
      if (f.reachable(u)) seen.set(u);
  }
  return components;
}

bool is_connected(const Graph& g) { return g.order() == 0 || component_count(g) == 1; }

BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteResult res;
  res.side.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    if (dist[static_cast<std::size_t>(root)] >= 0) continue;
    dist[static_cast<std::size_t>(root)] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          res.side[static_cast<std::size_t>(v)] =
              static_cast<std::int8_t>(1 - res.side[static_cast<std::size_t>(u)]);
          queue.push_back(v);
        } else if (res.side[static_cast<std::size_t>(v)] == res.side[static_cast<std::size_t>(u)]) {
          // Same side: tree paths root..u and root..v close an odd walk.
          res.bipartite = false;
          std::vector<int> up;
          for (int w = u; w >= 0; w = parent[static_cast<std::size_t>(w)]) up.push_back(w);
          std::reverse(up.begin(), up.end());  // root .. u
          res.odd_walk = std::move(up);
          for (int w = v; w >= 0; w = parent[static_cast<std::size_t>(w)])
            res.odd_walk.push_back(w);  // v .. root
          res.side.clear();
          return res;
        }
      }
    }
  }
  return res;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (v != parent[static_cast<std::size_t>(u)]) {
          // Non-tree edge: closed walk through the root of this length exists,
          // so it contains a cycle no longer than it. Minimizing over all
          // roots and edges yields the girth exactly.
          int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Graph double_cover(const Graph& g) {
  const int n = g.order();
  Graph d(2 * n);
  for (auto [u, v] : g.edges()) {
    d.add_edge(u, v + n);
    d.add_edge(u + n, v);
  }
  return d;
}

std::optional<int> odd_girth(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  Graph cover = double_cover(g);
  int best = -1;
  for (int v = 0; v < n; ++v) {
    DistanceField f = bfs(cover, v);
    if (!f.reachable(v + n)) continue;
    if (best < 0 || f[v + n] < best) best = f[v + n];
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<int> odd_girth_parity(const Graph& g) {
  // Shortest odd closed walk through v == shortest path from (v, even) to
  // (v, odd) over (vertex, parity) states; minimized over v this is the odd
  // girth, because a minimal odd closed walk is a simple cycle.
  const int n = g.order();
  int best = -1;
  std::vector<std::array<int, 2>> dist(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> queue;
  for (int src = 0; src < n; ++src) {
    for (auto& d : dist) d = {-1, -1};
    dist[static_cast<std::size_t>(src)][0] = 0;
    queue.clear();
    queue.emplace_back(src, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [u, p] = queue[head];
      int du = dist[static_cast<std::size_t>(u)][p];
      if (best >= 0 && du + 1 >= best) continue;
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
        int q = 1 - p;
        if (dist[static_cast<std::size_t>(v)][q] < 0) {
          dist[static_cast<std::size_t>(v)][q] = du + 1;
          queue.emplace_back(v, q);
        }
      }
    }
    int odd = dist[static_cast<std::size_t>(src)][1];
    if (odd >= 0 && (best < 0 || odd < best)) best = odd;
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  Graph cover = double_cover(g);
  int best = -1, best_src = -1;
  for (int v = 0; v < n; ++v) {
    DistanceField f = bfs(cover, v);
    if (f.reachable(v + n) && (best < 0 || f[v + n] < best)) {
      best = f[v + n];
      best_src = v;
    }
  }
  if (best < 0) return std::nullopt;
  // Recover the lift path (best_src, even) -> (best_src, odd) with
  // lowest-id-parent steps; a globally minimal odd closed walk is simple.
  DistanceField f = bfs(cover, best_src);
  std::vector<int> path;
  int cur = best_src + n;
  path.push_back(cur);
  while (cur != best_src) {
    const VertexSet& nb = cover.neighbors(cur);
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
      if (f.reachable(w) && f[w] == f[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::vector<int> cycle;
  cycle.reserve(path.size() - 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) cycle.push_back(path[i] % n);
  return cycle;
}

namespace {

// Canonical labeling by maximizing the graph6 bit sequence (column-major upper
// triangle) over all permutations. At each position only candidates whose
// adjacency column to the placed prefix is maximal can extend to the maximum,
// and one representative per twin class suffices (a transposition of twins is
// an automorphism).
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::vector<char>> twin;
  std::vector<int> cur, best;
  std::vector<std::uint32_t> cur_cols, best_cols;  // column bit-patterns per position
  std::vector<char> used;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
    twin.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool tw = true;
        for (int w = 0; w < n && tw; ++w) {
          if (w == u || w == v) continue;
          if (g.adjacent(u, w) != g.adjacent(v, w)) tw = false;
        }
        twin[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = tw;
        twin[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = tw;
      }
    cur.assign(static_cast<std::size_t>(n), -1);
    cur_cols.assign(static_cast<std::size_t>(n), 0);
    used.assign(static_cast<std::size_t>(n), 0);
  }

  std::uint32_t column_bits(int candidate, int pos) const {
    std::uint32_t bits = 0;
    for (int i = 0; i < pos; ++i)
      bits = (bits << 1) | (g.adjacent(cur[static_cast<std::size_t>(i)], candidate) ? 1u : 0u);
    return bits;
  }

  // Relation of the current column prefix to the best sequence: -1 below
  // (subtree cannot win), 0 tied, +1 above. Recomputed at node entry because
  // `best` may have moved while a sibling subtree ran.
  int prefix_relation(int pos) const {
    if (!have_best) return 1;
    for (int i = 0; i < pos; ++i) {
      if (cur_cols[static_cast<std::size_t>(i)] != best_cols[static_cast<std::size_t>(i)])
        return cur_cols[static_cast<std::size_t>(i)] < best_cols[static_cast<std::size_t>(i)] ? -1
                                                                                              : 1;
    }
    return 0;
  }

  void run(int pos) {
    if (pos == n) {
      if (!have_best || cur_cols > best_cols) {
        best = cur;
        best_cols = cur_cols;
        have_best = true;
      }
      return;
    }
    int rel = prefix_relation(pos);
    if (rel < 0) return;
    std::uint32_t max_bits = 0;
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      max_bits = std::max(max_bits, column_bits(c, pos));
    }
    // The first pos+1 columns of any completion start cur_cols + max_bits, so
    // only maximal columns can reach the subtree maximum.
    if (rel == 0 && max_bits < best_cols[static_cast<std::size_t>(pos)]) return;
    std::vector<int> tried;
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      if (column_bits(c, pos) != max_bits) continue;
      bool dup = false;
      for (int t : tried)
        if (twin[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)]) {
          dup = true;
          break;
        }
      if (dup) continue;
      tried.push_back(c);
      cur[static_cast<std::size_t>(pos)] = c;
      cur_cols[static_cast<std::size_t>(pos)] = max_bits;
      used[static_cast<std::size_t>(c)] = 1;
      run(pos + 1);
      used[static_cast<std::size_t>(c)] = 0;
    }
    cur[static_cast<std::size_t>(pos)] = -1;
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 12) throw std::invalid_argument("canonical_form: order > 12");
  if (n == 0) return to_graph6(g);
  CanonSearch search(g);
  search.run(0);
  Graph relabeled(n);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(search.best[static_cast<std::size_t>(i)])] = i;
  for (auto [u, v] : g.edges())
    relabeled.add_edge(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
  return to_graph6(relabeled);
}

}  // namespace sysgraph
