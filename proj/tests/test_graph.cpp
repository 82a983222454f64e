#include <random>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "hamindex/families.hpp"
#include "hamindex/graph.hpp"
#include "hamindex/graph_io.hpp"

using namespace hamindex;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

bool symmetric_and_loop_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.has_edge(u, u)) return false;
    for (int v = 0; v < g.order(); ++v)
      if (g.has_edge(u, v) != g.has_edge(v, u)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("complete and empty graphs") {
  CHECK(complete(1).edge_count() == 0);
  const auto k5 = basic_stats(complete(5));
  CHECK(k5.e == 10);
  CHECK(k5.min_degree == 4);
  CHECK(complete(0).order() == 0);

  const auto e4 = basic_stats(empty(4));
  CHECK(e4.e == 0);
  CHECK(e4.min_degree == 0);
  CHECK(empty(1).order() == 1);
  CHECK(empty(0).order() == 0);

  CHECK_THROWS_AS(complete(129), CapacityError);
  CHECK_THROWS_AS(empty(200), CapacityError);
  CHECK(complete(128).edge_count() == 128 * 127 / 2);
}

TEST_CASE("complete bipartite graphs") {
  auto [k24, parts] = complete_bipartite(2, 4);
  CHECK(k24.edge_count() == 8);
  CHECK(parts.left.count() == 2);
  CHECK(parts.right.count() == 4);

  CHECK(complete_bipartite(1, 3).first.edge_count() == 3);
  const auto [k03, p03] = complete_bipartite(0, 3);
  CHECK(k03.order() == 3);
  CHECK(k03.edge_count() == 0);
  CHECK(p03.left.empty());
}

TEST_CASE("disjoint union and join") {
  const Graph u = disjoint_union(complete(3), empty(2));
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 3);

  const Graph kk = disjoint_union(complete(2), complete(2));
  CHECK(kk.edge_count() == 2);
  CHECK(components_without(kk, {}) == 2);

  const Graph g = petersen();
  CHECK(disjoint_union(g, empty(0)) == g);
  CHECK(join(empty(0), g) == g);

  CHECK(join(complete(1), disjoint_union(complete(2), empty(2))).edge_count() == 5);
  const Graph g1 = join(complete(3), empty(4));
  CHECK(g1.order() == 7);
  CHECK(g1.edge_count() == 15);
}

TEST_CASE("complement") {
  for (int n = 0; n <= 7; ++n) CHECK(complement(complete(n)) == empty(n));

  // C5 complement is the cycle 0-2-4-1-3.
  const Graph c5bar = complement(cycle(5));
  const int order[] = {0, 2, 4, 1, 3};
  for (int i = 0; i < 5; ++i) CHECK(c5bar.has_edge(order[i], order[(i + 1) % 5]));
  CHECK(c5bar.edge_count() == 5);

  // complement(K2,4) = K2 + K4 on the same labels.
  const Graph k24bar = complement(complete_bipartite(2, 4).first);
  CHECK(k24bar == disjoint_union(complete(2), complete(4)));
}

TEST_CASE("delete vertex keeps order of the rest") {
  CHECK(delete_vertex(complete(3), 1) == complete(2));
  CHECK(delete_vertex(complete(1), 0).order() == 0);

  const Graph p = path(4);  // 0-1-2-3
  const Graph q = delete_vertex(p, 1);
  CHECK(q.order() == 3);
  CHECK(q.has_edge(1, 2));  // old 2-3
  CHECK(q.edge_count() == 1);
  CHECK_THROWS_AS(delete_vertex(p, 4), ParameterOutOfRange);

  // Dropping a dominating vertex of N^{k+1}_{n+1} gives Nbar^k_n.
  const Graph n_big = build({FamilyTag::N, 11, 2, 0});
  CHECK(n_big.degree(0) == 10);
  CHECK(delete_vertex(n_big, 0) == build({FamilyTag::Nbar, 10, 1, 0}));
}

TEST_CASE("basic stats") {
  const auto n29 = basic_stats(build({FamilyTag::N, 9, 2, 0}));
  CHECK(n29.n == 9);
  CHECK(n29.e == 25);
  CHECK(n29.min_degree == 2);
  CHECK(n29.connected);

  const auto p4 = basic_stats(path(4));
  CHECK(p4.e == 3);
  CHECK(p4.min_degree == 1);
  CHECK(p4.connected);
  REQUIRE(p4.bipartition);
  CHECK(p4.bipartition->left.count() == 2);
  CHECK(p4.bipartition->right.count() == 2);

  CHECK_FALSE(basic_stats(disjoint_union(complete(3), complete(2))).connected);
  CHECK_FALSE(basic_stats(complete(3)).bipartition);
}

TEST_CASE("construction algebra invariants on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, static_cast<int>(rng() % 9), 0.4);
    const Graph h = random_graph(rng, static_cast<int>(rng() % 9), 0.6);
    const long ng = g.order(), nh = h.order();
    CHECK(join(g, h).edge_count() == g.edge_count() + h.edge_count() + ng * nh);
    CHECK(disjoint_union(g, h).edge_count() == g.edge_count() + h.edge_count());
    CHECK(complement(complement(g)) == g);
    CHECK(g.edge_count() + complement(g).edge_count() == ng * (ng - 1) / 2);
    CHECK(symmetric_and_loop_free(join(g, h)));
    if (ng >= 1) {
      const auto s = basic_stats(g);
      CHECK(s.min_degree * ng <= 2 * s.e);
    }
  }
}

TEST_CASE("graph6 matches reference strings") {
  CHECK(to_graph6(petersen()) == "IheA@GUAo");
  CHECK(to_graph6(path(4)) == "Ch");
  CHECK(to_graph6(complete(5)) == "D~{");
  CHECK(to_graph6(path(70)).substr(0, 12) == "~?@EhCGGC@?G");

  CHECK(from_graph6("IheA@GUAo") == petersen());
  CHECK(from_graph6(">>graph6<<D~{") == complete(5));
  CHECK(from_graph6(to_graph6(path(70))) == path(70));
  CHECK(from_graph6(to_graph6(complete(128))) == complete(128));
  CHECK_THROWS_AS(from_graph6("D~"), ParseError);
  CHECK_THROWS_AS(from_graph6(""), ParseError);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, static_cast<int>(rng() % 80), 0.3);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("edge list format") {
  const Graph p = path(4);
  CHECK(to_edge_list(p) == "4 3\n0 1\n1 2\n2 3\n");
  std::istringstream in(to_edge_list(p));
  CHECK(read_edge_list(in) == p);

  std::istringstream bad("3 2\n0 1\n0 7\n");
  try {
    read_edge_list(bad, "bad.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("bad.txt:3") != std::string::npos);
  }
  std::istringstream short_list("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(short_list), ParseError);
}
