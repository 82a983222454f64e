#include <catch_amalgamated.hpp>

#include "hamindex/canon.hpp"
#include "hamindex/families.hpp"
#include "hamindex/metrics.hpp"

using namespace hamindex;

namespace {

int min_degree(const Graph& g) { return basic_stats(g).min_degree; }

Graph kk(int a) { return complete(a); }
Graph ek(int a) { return empty(a); }

}  // namespace

TEST_CASE("family spec text round trip") {
  const auto n = FamilySpec::parse("N:n=9,k=2");
  CHECK(n.tag == FamilyTag::N);
  CHECK(n.n == 9);
  CHECK(n.k == 2);
  CHECK(FamilySpec::parse(n.str()) == n);

  const auto g = FamilySpec::parse("G1:n=7,i=1");
  CHECK(g.tag == FamilyTag::G1Item);
  CHECK(g.item == 1);
  CHECK(FamilySpec::parse(g.str()) == g);
  CHECK(FamilySpec::parse("G2:i=5").n == 8);

  CHECK(FamilySpec::parse("B:n=3,k=1").tag == FamilyTag::B);
  CHECK(FamilySpec::parse("Lbar:n=10,k=1").tag == FamilyTag::Lbar);
  CHECK_THROWS_AS(FamilySpec::parse("Q:n=3"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("N:n=9,k"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("N:n=x,k=2"), ParseError);
}

TEST_CASE("parameter ranges") {
  CHECK(is_valid({FamilyTag::N, 9, 4, 0}));
  CHECK_FALSE(is_valid({FamilyTag::N, 9, 5, 0}));
  CHECK_FALSE(is_valid({FamilyTag::L, 9, 0, 0}));
  CHECK(is_valid({FamilyTag::Nbar, 10, 0, 0}));
  CHECK(is_valid({FamilyTag::Nbar, 10, 4, 0}));
  CHECK_FALSE(is_valid({FamilyTag::Nbar, 10, 5, 0}));
  CHECK(is_valid({FamilyTag::B, 4, 2, 0}));
  CHECK_FALSE(is_valid({FamilyTag::B, 4, 3, 0}));
  CHECK_FALSE(is_valid({FamilyTag::B, 4, 0, 0}));
  CHECK(is_valid({FamilyTag::G1Item, 7, 0, 1}));
  CHECK_FALSE(is_valid({FamilyTag::G1Item, 8, 0, 1}));
  CHECK_FALSE(is_valid({FamilyTag::G2Item, 6, 0, 9}));
  CHECK_THROWS_AS(build({FamilyTag::N, 9, 5, 0}), ParameterOutOfRange);
  CHECK_THROWS_AS(edge_count({FamilyTag::G1Item, 7, 0, 1}), UnsupportedFamily);
}

TEST_CASE("family constructions") {
  const Graph n29 = build({FamilyTag::N, 9, 2, 0});
  CHECK(n29 == join(kk(2), disjoint_union(kk(5), ek(2))));
  CHECK(n29.edge_count() == 25);

  CHECK(is_isomorphic(build({FamilyTag::L, 9, 1, 0}), build({FamilyTag::N, 9, 1, 0})));

  const Graph b = build({FamilyTag::B, 3, 1, 0});
  CHECK(b.order() == 6);
  CHECK(b.edge_count() == 7);
  CHECK(min_degree(b) == 1);
  const auto parts = b_family_parts(3);
  CHECK(parts.left == VertexSet::range(3));
  for (auto [u, v] : b.edges()) CHECK(parts.left.test(u) != parts.left.test(v));

  CHECK(is_isomorphic(build({FamilyTag::Lbar, 10, 1, 0}), disjoint_union(kk(2), kk(8))));
  CHECK(is_isomorphic(build({FamilyTag::Nbar, 10, 1, 0}), join(kk(1), disjoint_union(kk(7), ek(2)))));
}

TEST_CASE("closed-form edge counts") {
  CHECK(edge_count({FamilyTag::N, 9, 2, 0}) == 25);
  CHECK(edge_count({FamilyTag::Nbar, 10, 1, 0}) == 30);
  CHECK(edge_count({FamilyTag::Lbar, 10, 1, 0}) == 29);
  CHECK(edge_count({FamilyTag::B, 3, 1, 0}) == 7);

  int checked = 0;
  for (int n = 1; n <= 40; ++n)
    for (int k = 0; k <= n; ++k)
      for (FamilyTag tag : {FamilyTag::L, FamilyTag::N, FamilyTag::Lbar, FamilyTag::Nbar, FamilyTag::B}) {
        const FamilySpec spec{tag, n, k, 0};
        if (!is_valid(spec)) continue;
        INFO(spec.str());
        CHECK(build(spec).edge_count() == edge_count(spec));
        ++checked;
      }
  CHECK(checked > 1000);
}

TEST_CASE("minimum degree and diameter of the families") {
  for (int n = 3; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) {
      const FamilySpec nspec{FamilyTag::N, n, k, 0};
      if (is_valid(nspec)) {
        const Graph g = build(nspec);
        CHECK(min_degree(g) == k);
        CHECK(diameter(g) == 2);
      }
      const FamilySpec nbar{FamilyTag::Nbar, n, k, 0};
      if (is_valid(nbar) && k >= 1) {
        const Graph g = build(nbar);
        CHECK(min_degree(g) == k);
        CHECK(diameter(g) == 2);
      }
      const FamilySpec bspec{FamilyTag::B, n, k, 0};
      if (is_valid(bspec) && 2 * n <= 40) CHECK(min_degree(build(bspec)) == k);
    }
}

TEST_CASE("G1 members by order") {
  const auto m7 = g1_members(7);
  REQUIRE(m7.size() == 4);
  CHECK(is_isomorphic(m7[0].graph, join(kk(2), disjoint_union(kk(3), ek(2)))));
  CHECK(is_isomorphic(m7[1].graph, join(kk(3), ek(4))));
  CHECK(is_isomorphic(m7[2].graph, join(kk(2), disjoint_union(complete_bipartite(1, 3).first, ek(1)))));
  CHECK(is_isomorphic(m7[3].graph, join(kk(1), complete_bipartite(2, 4).first)));
  CHECK(build(FamilySpec::parse("G1:n=7,i=1")) == m7[1].graph);

  const auto m11 = g1_members(11);
  REQUIRE(m11.size() == 2);
  CHECK(is_isomorphic(m11[0].graph, join(kk(2), disjoint_union(kk(7), ek(2)))));
  CHECK(is_isomorphic(m11[1].graph, join(kk(5), ek(6))));

  CHECK(g1_members(20).size() == 1);
  CHECK(g1_members(8).size() == 2);
  CHECK(g1_members(9).size() == 4);

  // The parametric member is N^2_n.
  for (int n = 5; n <= 20; ++n) CHECK(g1_members(n)[0].graph == build({FamilyTag::N, n, 2, 0}));

  for (int n = 5; n <= 20; ++n)
    for (const auto& m : g1_members(n)) {
      INFO(m.name);
      CHECK(m.graph.order() == n);
      CHECK(min_degree(m.graph) >= 2);
      CHECK(is_connected(m.graph));
    }
}

TEST_CASE("G2 members by order") {
  const auto m6 = g2_members(6);
  REQUIRE(m6.size() == 4);
  bool has_k24 = false, has_k2_4k1 = false;
  for (const auto& m : m6) {
    has_k24 = has_k24 || is_isomorphic(m.graph, complete_bipartite(2, 4).first);
    has_k2_4k1 = has_k2_4k1 || is_isomorphic(m.graph, join(kk(2), ek(4)));
  }
  CHECK(has_k24);
  CHECK(has_k2_4k1);

  const auto m10 = g2_members(10);
  REQUIRE(m10.size() == 2);
  CHECK(is_isomorphic(m10[0].graph, join(kk(1), disjoint_union(kk(7), ek(2)))));
  CHECK(is_isomorphic(m10[1].graph, join(kk(4), ek(6))));

  CHECK(g2_members(12).size() == 1);
  CHECK(g2_members(7).size() == 2);
  CHECK(g2_members(8).size() == 4);

  for (int n = 4; n <= 20; ++n) {
    CHECK(g2_members(n)[0].graph == build({FamilyTag::Nbar, n, 1, 0}));
    for (const auto& m : g2_members(n)) {
      INFO(m.name);
      CHECK(m.graph.order() == n);
      CHECK(min_degree(m.graph) >= 1);
      CHECK(is_connected(m.graph));
    }
  }
}

TEST_CASE("catalogs list every item once") {
  const auto c1 = g1_catalog(12);
  const auto c2 = g2_catalog(12);
  REQUIRE(c1.size() == kExceptionalListSize);
  REQUIRE(c2.size() == kExceptionalListSize);
  for (int i = 0; i < kExceptionalListSize; ++i) {
    CHECK(c1[i].item == i);
    CHECK(c2[i].item == i);
    if (i > 0) {
      CHECK(c1[i].graph.order() == g1_item_order(i));
      CHECK(c2[i].graph.order() == g2_item_order(i));
    }
  }
  CHECK(c1[0].graph.order() == 12);
  CHECK(g1_item_order(8) == 11);
  CHECK(g2_item_order(8) == 10);
}
