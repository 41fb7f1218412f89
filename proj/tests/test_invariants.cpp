#include <sysgraph/generators.hpp>
#include <sysgraph/graph.hpp>
#include <sysgraph/graph6.hpp>
#include <sysgraph/invariants.hpp>

#include <doctest.h>

#include <atomic>
#include <optional>
#include <random>
#include <vector>

using namespace sysgraph;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Exhaustive m-colorability: try all m^n assignments.
bool colorable_oracle(const Graph& g, int m) {
  int n = g.order();
  if (n == 0) return true;
  if (m <= 0) return false;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  while (true) {
    bool proper = true;
    for (auto [u, v] : g.edges()) {
      if (assign[u] == assign[v]) {
        proper = false;
        break;
      }
    }
    if (proper) return true;
    int i = 0;
    while (i < n && ++assign[static_cast<std::size_t>(i)] == m) assign[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

int chromatic_oracle(const Graph& g) {
  for (int m = 0;; ++m) {
    if (colorable_oracle(g, m)) return m;
  }
}

bool subset_bipartite(const Graph& g, const VertexSet& part) {
  return is_bipartite(induced(g, part).graph).bipartite;
}

bool subset_forest(const Graph& g, const VertexSet& part) {
  auto sub = induced(g, part);
  return sub.graph.edge_count() + static_cast<std::size_t>(component_count(sub.graph)) ==
         static_cast<std::size_t>(sub.graph.order());
}

// Exhaustive minimum partition into parts passing `ok`: all p^n assignments.
template <typename Ok>
int min_parts_oracle(const Graph& g, Ok ok) {
  int n = g.order();
  if (n == 0) return 0;
  for (int p = 1;; ++p) {
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    while (true) {
      bool good = true;
      for (int part = 0; part < p && good; ++part) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) {
          if (assign[static_cast<std::size_t>(v)] == part) s.set(v);
        }
        good = ok(g, s);
      }
      if (good) return p;
      int i = 0;
      while (i < n && ++assign[static_cast<std::size_t>(i)] == p) assign[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  }
}

}  // namespace

TEST_CASE("chromatic number on known graphs") {
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(Graph(4)) == 1);
  CHECK(chromatic_number(gen_path(5)) == 2);
  CHECK(chromatic_number(gen_cycle(6)) == 2);
  CHECK(chromatic_number(gen_cycle(5)) == 3);
  CHECK(chromatic_number(gen_cycle(9)) == 3);
  CHECK(chromatic_number(gen_complete(7)) == 7);
  CHECK(chromatic_number(gen_petersen()) == 3);
  CHECK(chromatic_number(gen_kneser(5, 2)) == 3);
  CHECK(chromatic_number(gen_groetzsch()) == 4);
  CHECK(chromatic_number(gen_mycielski(gen_groetzsch())) == 5);
  CHECK(chromatic_number(gen_general_mycielski(gen_cycle(7), 2)) == 4);
  CHECK(chromatic_number(gen_general_mycielski(gen_cycle(7), 3)) == 4);
}

TEST_CASE("chromatic number matches the exhaustive oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 160; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = random_graph(rng, n, trial % 2 ? 0.3 : 0.6);
    CHECK(chromatic_number(g) == chromatic_oracle(g));
  }
}

TEST_CASE("is_m_colorable produces verified colorings") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.4);
    int chi = chromatic_number(g);
    for (int m = std::max(0, chi - 2); m <= chi + 1; ++m) {
      auto col = is_m_colorable(g, m);
      CHECK(col.has_value() == (m >= chi));
      if (col) {
        CHECK(col->count <= m);
        CHECK(verify_coloring(g, *col));
      }
    }
  }
  auto empty = is_m_colorable(Graph(0), 0);
  REQUIRE(empty.has_value());
  CHECK(empty->count == 0);
  CHECK(!is_m_colorable(Graph(1), 0).has_value());
}

TEST_CASE("verify_coloring rejects improper colorings") {
  Graph c5 = gen_cycle(5);
  Coloring bad{{0, 1, 0, 1, 0}, 2};  // edge 4-0 monochromatic
  CHECK(!verify_coloring(c5, bad));
  Coloring good{{0, 1, 0, 1, 2}, 3};
  CHECK(verify_coloring(c5, good));
  CHECK(!verify_coloring(c5, Coloring{{0, 1, 0, 1}, 2}));     // size mismatch
  CHECK(!verify_coloring(c5, Coloring{{0, 1, 0, 1, 3}, 3}));  // color out of range
  CHECK(!verify_coloring(c5, Coloring{{0, 1, 0, 1, -1}, 3}));
}

TEST_CASE("essentiality matches the exhaustive partition oracle") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g = random_graph(rng, n, 0.5);
    auto ess = essentiality(g);
    CHECK(ess.n + 1 == min_parts_oracle(g, subset_bipartite));
    CHECK(ess.rule == PartRule::Bipartite);
    // the witness partition really is one
    VertexSet seen(n);
    int covered = 0;
    for (const auto& part : ess.parts) {
      CHECK(subset_bipartite(g, part));
      CHECK(!seen.intersects(part));
      seen |= part;
      covered += part.count();
    }
    CHECK(covered == n);

    auto fess = forest_essentiality(g);
    CHECK(fess.n + 1 == min_parts_oracle(g, subset_forest));
    CHECK(fess.rule == PartRule::Forest);
    for (const auto& part : fess.parts) CHECK(subset_forest(g, part));
    // forests are bipartite, so the forest partition is never smaller
    CHECK(fess.n >= ess.n);
  }
}

TEST_CASE("essentiality on known graphs") {
  CHECK(essentiality(Graph(0)).n == -1);
  CHECK(essentiality(Graph(3)).n == 0);
  CHECK(essentiality(gen_cycle(6)).n == 0);
  CHECK(essentiality(gen_cycle(5)).n == 1);
  CHECK(essentiality(gen_petersen()).n == 1);
  CHECK(essentiality(gen_groetzsch()).n == 1);
  CHECK(essentiality(gen_complete(7)).n == 3);  // ceil(7/2) - 1

  CHECK(forest_essentiality(gen_cycle(5)).n == 1);
  CHECK(forest_essentiality(gen_path(4)).n == 0);
  CHECK(forest_essentiality(gen_complete(7)).n == 3);  // vertex arboricity 4
  CHECK(forest_essentiality(gen_petersen()).n == 1);
}

TEST_CASE("essentiality identity with the chromatic number") {
  // n(X) = ceil(chi/2) - 1 on assorted graphs
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = random_graph(rng, n, 0.45);
    int chi = chromatic_number(g);
    CHECK(essentiality(g).n == (chi + 1) / 2 - 1);
  }
  CHECK(essentiality(gen_mycielski(gen_groetzsch())).n == 2);  // chi = 5
}

TEST_CASE("pi_inessential coincides with induced bipartiteness") {
  std::mt19937 rng(432);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, 0.35);
    VertexSet s(n);
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) s.set(v);
    }
    CHECK(pi_inessential(g, s) == subset_bipartite(g, s));
  }
}

TEST_CASE("triviality radius") {
  CHECK(triviality_radius(gen_cycle(6)) == std::nullopt);
  CHECK(triviality_radius(gen_path(5)) == std::nullopt);
  for (int k = 1; k <= 8; ++k) {
    CHECK(triviality_radius(gen_cycle(2 * k + 1)) == k - 1);
  }
  CHECK(triviality_radius(gen_petersen()) == 1);
  CHECK(triviality_radius(gen_groetzsch()) == 1);
  CHECK(triviality_radius(gen_complete(4)) == 0);

  // definitional cross-check: largest r with every radius-r ball bipartite
  std::mt19937 rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_graph(rng, n, 0.3);
    auto tr = triviality_radius(g);
    if (!tr) {
      CHECK(is_bipartite(g).bipartite);
      continue;
    }
    for (int x = 0; x < n; ++x) CHECK(subset_bipartite(g, ball(g, x, *tr)));
    bool broken = false;
    for (int x = 0; x < n && !broken; ++x) broken = !subset_bipartite(g, ball(g, x, *tr + 1));
    CHECK(broken);
  }
}

TEST_CASE("max ball size") {
  CHECK(max_ball_size(gen_cycle(5), 1).size == 3);
  CHECK(max_ball_size(gen_cycle(5), 2).size == 5);
  CHECK(max_ball_size(gen_petersen(), 1).size == 4);
  CHECK(max_ball_size(gen_petersen(), 2).size == 10);
  // lowest center id wins ties
  CHECK(max_ball_size(gen_cycle(5), 1).center == 0);

  std::mt19937 rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, 0.3);
    for (int r = 0; r <= 3; ++r) {
      auto bm = max_ball_size(g, r);
      int best = 0;
      for (int x = 0; x < n; ++x) best = std::max(best, ball(g, x, r).count());
      CHECK(bm.size == best);
      CHECK(ball(g, bm.center, r).count() == best);
    }
  }
}

TEST_CASE("searches honor cancellation") {
  std::atomic<bool> cancel{true};
  SearchLimits limits{&cancel};
  // large enough that the search must poll before finishing
  Graph g = gen_mycielski(gen_mycielski(gen_groetzsch()));
  CHECK_THROWS_AS(chromatic_number(g, limits), SearchCancelled);
}
