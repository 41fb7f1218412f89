#include "sysgraph/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace sysgraph {

namespace {

constexpr long long kCancelPollInterval = 4096;

void poll_cancel(const SearchLimits& limits, long long& ticks) {
  if (limits.cancel && ++ticks % kCancelPollInterval == 0 &&
      limits.cancel->load(std::memory_order_relaxed))
    throw SearchCancelled();
}

/// Proper 2-colorability of the subgraph induced by `s`, without materializing it.
bool subset_bipartite(const Graph& g, const VertexSet& s, std::vector<int>& side) {
  side.assign(g.order(), -1);
  std::vector<int> stack;
  for (int r = s.first(); r >= 0; r = s.next(r)) {
    if (side[r] != -1) continue;
    side[r] = 0;
    stack.assign(1, r);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(u);
      nb &= s;
      for (int v = nb.first(); v >= 0; v = nb.next(v)) {
        if (side[v] == -1) {
          side[v] = side[u] ^ 1;
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Acyclicity of the subgraph induced by `s`: edges == vertices - components.
bool subset_forest(const Graph& g, const VertexSet& s, std::vector<int>& mark) {
  int verts = 0, twice_edges = 0;
  for (int u = s.first(); u >= 0; u = s.next(u)) {
    ++verts;
    VertexSet nb = g.neighbors(u);
    nb &= s;
    twice_edges += nb.count();
  }
  mark.assign(g.order(), 0);
  std::vector<int> stack;
  int comps = 0;
  for (int r = s.first(); r >= 0; r = s.next(r)) {
    if (mark[r]) continue;
    ++comps;
    mark[r] = 1;
    stack.assign(1, r);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(u);
      nb &= s;
      for (int v = nb.first(); v >= 0; v = nb.next(v)) {
        if (!mark[v]) {
          mark[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return twice_edges / 2 == verts - comps;
}

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

struct ColorSearch {
  const Graph& g;
  const SearchLimits& limits;
  int n;
  int m;
  std::vector<int> color;
  std::vector<VertexSet> sat;  // colors present among colored neighbors
  std::vector<int> sat_count;
  int used = 0;
  long long ticks = 0;

  ColorSearch(const Graph& graph, int colors, const SearchLimits& lim)
      : g(graph),
        limits(lim),
        n(graph.order()),
        m(colors),
        color(static_cast<std::size_t>(n), -1),
        sat(static_cast<std::size_t>(n), VertexSet(n + 1)),
        sat_count(static_cast<std::size_t>(n), 0) {}

  int select() const {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      if (best == -1 || sat_count[v] > sat_count[best] ||
          (sat_count[v] == sat_count[best] && g.degree(v) > g.degree(best)))
        best = v;
    }
    return best;
  }

  bool solve(int colored) {
    poll_cancel(limits, ticks);
    if (colored == n) return true;
    int v = select();
    // A fresh color may only enter as the next unused index.
    int cmax = std::min(m - 1, used);
    for (int c = 0; c <= cmax; ++c) {
      if (sat[v].test(c)) continue;
      color[v] = c;
      int prev_used = used;
      used = std::max(used, c + 1);
      std::vector<int> touched;
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
        if (color[u] == -1 && !sat[u].test(c)) {
          sat[u].set(c);
          ++sat_count[u];
          touched.push_back(u);
        }
      }
      if (solve(colored + 1)) return true;
      for (int u : touched) {
        sat[u].reset(c);
        --sat_count[u];
      }
      used = prev_used;
      color[v] = -1;
    }
    return false;
  }
};

int greedy_clique_bound(const Graph& g) {
  const auto order = degree_order(g);
  int best = g.order() > 0 ? 1 : 0;
  for (int start : order) {
    VertexSet common = g.neighbors(start);
    int size = 1;
    for (int v : order) {
      if (!common.test(v)) continue;
      ++size;
      common &= g.neighbors(v);
    }
    best = std::max(best, size);
  }
  return best;
}

int greedy_color_bound(const Graph& g) {
  const auto order = degree_order(g);
  std::vector<int> color(g.order(), -1);
  int used = 0;
  for (int v : order) {
    VertexSet taken(g.order() + 1);
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (color[u] != -1) taken.set(color[u]);
    int c = 0;
    while (taken.test(c)) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

struct PartSearch {
  const Graph& g;
  const SearchLimits& limits;
  PartRule rule;
  int p;
  std::vector<int> order;
  std::vector<VertexSet> members;
  std::vector<int> scratch;
  long long ticks = 0;

  PartSearch(const Graph& graph, PartRule r, int parts, const SearchLimits& lim)
      : g(graph), limits(lim), rule(r), p(parts), order(degree_order(graph)) {
    members.assign(static_cast<std::size_t>(p), VertexSet(g.order()));
  }

  bool part_ok(int j) {
    return rule == PartRule::Bipartite ? subset_bipartite(g, members[j], scratch)
                                       : subset_forest(g, members[j], scratch);
  }

  bool solve(std::size_t idx, int parts_used) {
    poll_cancel(limits, ticks);
    if (idx == order.size()) return true;
    int v = order[idx];
    // A fresh part may only enter as the next unused index.
    int jmax = std::min(p - 1, parts_used);
    for (int j = 0; j <= jmax; ++j) {
      members[j].set(v);
      if (part_ok(j) && solve(idx + 1, std::max(parts_used, j + 1))) return true;
      members[j].reset(v);
    }
    return false;
  }
};

EssentialityResult min_partition(const Graph& g, PartRule rule, const SearchLimits& limits) {
  EssentialityResult result;
  result.rule = rule;
  if (g.order() == 0) {
    result.n = -1;
    return result;
  }
  for (int p = 1;; ++p) {
    PartSearch search(g, rule, p, limits);
    if (search.solve(0, 0)) {
      result.parts = std::move(search.members);
      result.n = p - 1;
      return result;
    }
  }
}

}  // namespace

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (int color : c.colors)
    if (color < 0 || color >= c.count) return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

std::optional<Coloring> is_m_colorable(const Graph& g, int m, const SearchLimits& limits) {
  if (g.order() == 0) return Coloring{{}, 0};
  if (m <= 0) return std::nullopt;
  ColorSearch search(g, m, limits);
  if (!search.solve(0)) return std::nullopt;
  return Coloring{std::move(search.color), search.used};
}

int chromatic_number(const Graph& g, const SearchLimits& limits) {
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  if (is_bipartite(g).bipartite) return 2;
  int lb = std::max(greedy_clique_bound(g), 3);
  int ub = greedy_color_bound(g);
  for (int m = lb; m < ub; ++m)
    if (is_m_colorable(g, m, limits)) return m;
  return ub;
}

EssentialityResult essentiality(const Graph& g, const SearchLimits& limits) {
  return min_partition(g, PartRule::Bipartite, limits);
}

EssentialityResult forest_essentiality(const Graph& g, const SearchLimits& limits) {
  return min_partition(g, PartRule::Forest, limits);
}

bool pi_inessential(const Graph& g, const VertexSet& subset) {
  InducedGraph sub = induced(g, subset);
  return component_count(double_cover(sub.graph)) == 2 * component_count(sub.graph);
}

std::optional<int> triviality_radius(const Graph& g) {
  if (is_bipartite(g).bipartite) return std::nullopt;
  std::vector<int> buf;
  for (int r = 1;; ++r) {
    for (int x = 0; x < g.order(); ++x) {
      if (!subset_bipartite(g, ball(g, x, r), buf)) return r - 1;
    }
  }
}

BallMax max_ball_size(const Graph& g, int r) {
  BallMax best;
  for (int x = 0; x < g.order(); ++x) {
    int size = r >= 0 ? ball(g, x, r).count() : 0;
    if (size > best.size) {
      best.size = size;
      best.center = x;
    }
  }
  return best;
}

}  // namespace sysgraph
