#include <sysgraph/generators.hpp>
#include <sysgraph/graph.hpp>
#include <sysgraph/graph6.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
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

constexpr int kInf = 1 << 28;

// All-pairs distances by Floyd-Warshall, the reference for every metric query.
std::vector<std::vector<int>> apsp(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int m = 0; m < n; ++m) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][m] + d[m][v]);
    }
  }
  return d;
}

// Shortest cycle through an edge = 1 + distance between its ends without it.
std::optional<int> girth_oracle(const Graph& g) {
  int best = kInf;
  for (auto [u, v] : g.edges()) {
    Graph h(g.order());
    for (auto [a, b] : g.edges()) {
      if (!(a == u && b == v)) h.add_edge(a, b);
    }
    int duv = apsp(h)[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    best = std::min(best, duv + 1);
  }
  if (best >= kInf) return std::nullopt;
  return best;
}

// The shortest odd closed walk is a shortest odd cycle, so count walks via
// adjacency-matrix powers and take the first odd length with a positive trace.
std::optional<int> odd_girth_oracle(const Graph& g) {
  int n = g.order();
  using Mat = std::vector<std::vector<long long>>;
  auto mul = [n](const Mat& a, const Mat& b) {
    Mat c(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
      for (int m = 0; m < n; ++m) {
        if (a[i][m] == 0) continue;
        for (int j = 0; j < n; ++j) {
          c[i][j] = std::min<long long>(1, c[i][j] + a[i][m] * b[m][j]);  // boolean product
        }
      }
    }
    return c;
  };
  Mat adj(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  Mat power = adj;
  for (int len = 1; len <= n; len += 2) {
    if (len > 1) power = mul(mul(power, adj), adj);
    for (int v = 0; v < n; ++v) {
      if (power[v][v] > 0) return len;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("vertex set operations match a std::set reference") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    int universe = 1 + static_cast<int>(rng() % 140);
    VertexSet s(universe);
    std::set<int> ref;
    for (int step = 0; step < 120; ++step) {
      int v = static_cast<int>(rng() % static_cast<unsigned>(universe));
      if (rng() % 2) {
        s.set(v);
        ref.insert(v);
      } else {
        s.reset(v);
        ref.erase(v);
      }
    }
    CHECK(s.count() == static_cast<int>(ref.size()));
    CHECK(s.empty() == ref.empty());
    CHECK(s.to_vector() == std::vector<int>(ref.begin(), ref.end()));
    CHECK(s.first() == (ref.empty() ? -1 : *ref.begin()));
    // iteration via first/next visits exactly the reference elements
    std::vector<int> seen;
    for (int v = s.first(); v >= 0; v = s.next(v)) seen.push_back(v);
    CHECK(seen == std::vector<int>(ref.begin(), ref.end()));
  }
}

TEST_CASE("vertex set algebra") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    int universe = 1 + static_cast<int>(rng() % 100);
    auto make = [&] {
      VertexSet s(universe);
      std::set<int> ref;
      for (int i = 0; i < universe / 2; ++i) {
        int v = static_cast<int>(rng() % static_cast<unsigned>(universe));
        s.set(v);
        ref.insert(v);
      }
      return std::pair(s, ref);
    };
    auto [a, ra] = make();
    auto [b, rb] = make();

    VertexSet u = a;
    u |= b;
    std::set<int> ru = ra;
    ru.insert(rb.begin(), rb.end());
    CHECK(u.to_vector() == std::vector<int>(ru.begin(), ru.end()));

    VertexSet i = a;
    i &= b;
    std::vector<int> ri;
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(ri));
    CHECK(i.to_vector() == ri);

    VertexSet d = a;
    d.subtract(b);
    std::vector<int> rd;
    std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(rd));
    CHECK(d.to_vector() == rd);

    CHECK(a.intersects(b) == !ri.empty());
    CHECK(i.is_subset_of(a));
    CHECK(i.is_subset_of(b));
    CHECK(d.is_subset_of(a));
  }
  CHECK(VertexSet::all(5).count() == 5);
  CHECK(VertexSet::all(0).empty());
}

TEST_CASE("bfs distances match Floyd-Warshall") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 250; ++trial) {
    int n = 1 + static_cast<int>(rng() % 14);
    Graph g = random_graph(rng, n, 0.25);
    auto d = apsp(g);
    for (int s = 0; s < n; ++s) {
      auto field = bfs(g, s);
      CHECK(field.source == s);
      for (int v = 0; v < n; ++v) {
        int expect = d[s][v] >= kInf ? -1 : d[s][v];
        CHECK(field[v] == expect);
        CHECK(field.reachable(v) == (expect >= 0));
      }
    }
  }
}

TEST_CASE("balls and spheres match the distance filter") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(rng, n, 0.3);
    auto d = apsp(g);
    for (int x = 0; x < n; ++x) {
      for (int r = 0; r <= n; ++r) {
        VertexSet b = ball(g, x, r);
        VertexSet s = sphere(g, x, r);
        for (int v = 0; v < n; ++v) {
          CHECK(b.test(v) == (d[x][v] <= r));
          CHECK(s.test(v) == (d[x][v] == r));
        }
      }
    }
  }
}

TEST_CASE("ball profile stabilizes at the component") {
  Graph g = parse_graph6("Dhc");  // C_5
  auto prof = ball_profile(g, 0);
  CHECK(prof.center == 0);
  CHECK(prof.sizes == std::vector<int>{1, 3, 5});

  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(ball_profile(two, 0).sizes == std::vector<int>{1, 2});
}

TEST_CASE("bfs_within respects the allowed set") {
  Graph c6 = gen_cycle(6);
  VertexSet allowed(6);
  for (int v : {0, 1, 2, 3, 4}) allowed.set(v);  // drop 5: path 0..4
  auto field = bfs_within(c6, 0, allowed);
  CHECK(field[0] == 0);
  CHECK(field[4] == 4);  // the short way around is blocked
  CHECK(field[5] == -1);
}

TEST_CASE("induced subgraphs") {
  Graph pet = gen_petersen();
  VertexSet outer(10);
  for (int v = 0; v < 5; ++v) outer.set(v);
  auto sub = induced(pet, outer);
  CHECK(sub.vertices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(sub.graph == gen_cycle(5));
}

TEST_CASE("components and connectivity") {
  CHECK(component_count(Graph(0)) == 0);
  CHECK(component_count(Graph(3)) == 3);
  CHECK(component_count(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 2);
  CHECK(is_connected(gen_petersen()));
  CHECK(!is_connected(Graph(2)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));
}

TEST_CASE("bipartiteness with certificates") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(rng, n, 0.3);
    auto res = is_bipartite(g);
    if (res.bipartite) {
      for (auto [u, v] : g.edges()) CHECK(res.side[u] != res.side[v]);
    } else {
      REQUIRE(!res.odd_walk.empty());
      CHECK(res.odd_walk.front() == res.odd_walk.back());
      CHECK((res.odd_walk.size() - 1) % 2 == 1);
      for (std::size_t i = 0; i + 1 < res.odd_walk.size(); ++i) {
        CHECK(g.adjacent(res.odd_walk[i], res.odd_walk[i + 1]));
      }
    }
  }
}

TEST_CASE("girth matches the edge-removal oracle") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, trial % 2 ? 0.2 : 0.45);
    CHECK(girth(g) == girth_oracle(g));
  }
  CHECK(girth(gen_petersen()) == 5);
  CHECK(girth(gen_groetzsch()) == 4);
  CHECK(girth(gen_path(6)) == std::nullopt);
}

TEST_CASE("odd girth matches the closed-walk oracle") {
  std::mt19937 rng(987);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, trial % 2 ? 0.2 : 0.45);
    auto expect = odd_girth_oracle(g);
    CHECK(odd_girth(g) == expect);
    CHECK(odd_girth_parity(g) == expect);
    auto cyc = shortest_odd_cycle(g);
    CHECK(cyc.has_value() == expect.has_value());
    if (cyc) {
      CHECK(static_cast<int>(cyc->size()) == *expect);
      auto L = cyc->size();
      for (std::size_t i = 0; i < L; ++i) CHECK(g.adjacent((*cyc)[i], (*cyc)[(i + 1) % L]));
      std::set<int> distinct(cyc->begin(), cyc->end());
      CHECK(distinct.size() == L);  // simple cycle
    }
  }
  CHECK(odd_girth(gen_groetzsch()) == 5);
  CHECK(odd_girth(gen_cycle(6)) == std::nullopt);
}

TEST_CASE("double cover") {
  std::mt19937 rng(246);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, 0.3);
    Graph cover = double_cover(g);
    CHECK(cover.order() == 2 * n);
    CHECK(cover.edge_count() == 2 * g.edge_count());
    CHECK(is_bipartite(cover).bipartite);
    // component doubles exactly over bipartite components
    int doubled = component_count(cover);
    int base = component_count(g);
    CHECK(doubled >= base);
    CHECK(doubled <= 2 * base);
    if (is_bipartite(g).bipartite) CHECK(doubled == 2 * base);
  }
  // odd cycles lift to one big even cycle
  Graph lifted = double_cover(gen_cycle(5));
  CHECK(component_count(lifted) == 1);
  CHECK(girth(lifted) == 10);
}

TEST_CASE("canonical form is an isomorphism invariant") {
  std::mt19937 rng(13579);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_graph(rng, n, 0.4);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    CHECK(canonical_form(g) == canonical_form(h));
    // the canonical string is itself a graph6 encoding of an isomorphic graph
    Graph canon = parse_graph6(canonical_form(g));
    CHECK(canon.order() == n);
    CHECK(canon.edge_count() == g.edge_count());
  }

  // same degree sequences, different graphs
  Graph c6 = gen_cycle(6);
  Graph twoK3 = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_form(c6) != canonical_form(twoK3));

  Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                    {2, 3}, {2, 4}, {2, 5}});
  Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                      {0, 3}, {1, 4}, {2, 5}});
  CHECK(canonical_form(k33) != canonical_form(prism));

  CHECK(canonical_form(gen_kneser(5, 2)) == canonical_form(gen_petersen()));
}

TEST_CASE("graph basics") {
  Graph g(3);
  CHECK_THROWS(g.add_edge(0, 0));
  CHECK_THROWS(g.add_edge(0, 3));
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // duplicate collapses
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(g.degree(1) == 1);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("family generators") {
  CHECK(gen_cycle(5) == parse_graph6("Dhc"));
  CHECK(gen_path(2).edge_count() == 1);
  CHECK(gen_complete(4).edge_count() == 6);
  CHECK(gen_petersen().order() == 10);
  CHECK(gen_petersen().edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(gen_petersen().degree(v) == 3);

  Graph kneser73 = gen_kneser(7, 3);  // 35 vertices, C(4,3)-regular
  CHECK(kneser73.order() == 35);
  for (int v = 0; v < 35; ++v) CHECK(kneser73.degree(v) == 4);

  CHECK(gen_groetzsch().order() == 11);
  CHECK(gen_groetzsch().edge_count() == 20);
  CHECK(gen_groetzsch() == gen_mycielski(gen_cycle(5)));
  CHECK(gen_mycielski(gen_cycle(5)) == gen_general_mycielski(gen_cycle(5), 2));

  Graph m3c7 = gen_general_mycielski(gen_cycle(7), 3);
  CHECK(m3c7.order() == 22);
  CHECK(odd_girth(m3c7) == 7);
  Graph m2c7 = gen_general_mycielski(gen_cycle(7), 2);
  CHECK(m2c7.order() == 15);
  CHECK(odd_girth(m2c7) == 5);

  CHECK_THROWS(gen_cycle(2));
  CHECK_THROWS(gen_kneser(3, 5));
}
