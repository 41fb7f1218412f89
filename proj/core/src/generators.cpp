#include "sysgraph/generators.hpp"

#include <stdexcept>
#include <vector>

namespace sysgraph {

Graph gen_path(int n) {
  if (n < 0) throw std::invalid_argument("gen_path: n >= 0 required");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: n >= 3 required");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph gen_complete(int n) {
  if (n < 0) throw std::invalid_argument("gen_complete: n >= 0 required");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_petersen() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);      // outer 5-cycle
    g.add_edge(v, v + 5);            // spokes
    g.add_edge(v + 5, (v + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

Graph gen_kneser(int ground, int subset) {
  if (subset < 1 || ground < subset)
    throw std::invalid_argument("gen_kneser: require 0 < subset <= ground");
  if (ground > 30) throw std::invalid_argument("gen_kneser: ground set too large");
  std::vector<unsigned> sets;
  for (unsigned mask = 0; mask < (1u << ground); ++mask)
    if (static_cast<int>(__builtin_popcount(mask)) == subset) sets.push_back(mask);
  if (sets.size() > static_cast<std::size_t>(Graph::max_order))
    throw std::invalid_argument("gen_kneser: vertex count exceeds order cap");
  Graph g(static_cast<int>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if ((sets[i] & sets[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph gen_mycielski(const Graph& g) { return gen_general_mycielski(g, 2); }

Graph gen_general_mycielski(const Graph& g, int levels) {
  if (levels < 1) throw std::invalid_argument("gen_general_mycielski: levels >= 1 required");
  const int n = g.order();
  const long long order = static_cast<long long>(levels) * n + 1;
  if (order > Graph::max_order)
    throw std::invalid_argument("gen_general_mycielski: order exceeds cap");
  Graph out(static_cast<int>(order));
  const int apex = static_cast<int>(order) - 1;
  for (auto [u, v] : g.edges()) {
    out.add_edge(u, v);  // level 0 induces g
    for (int level = 1; level < levels; ++level) {
      out.add_edge(level * n + u, (level - 1) * n + v);
      out.add_edge(level * n + v, (level - 1) * n + u);
    }
  }
  for (int v = 0; v < n; ++v) out.add_edge(apex, (levels - 1) * n + v);
  return out;
}

Graph gen_groetzsch() { return gen_mycielski(gen_cycle(5)); }

}  // namespace sysgraph
