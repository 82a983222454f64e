#include <catch_amalgamated.hpp>

#include <filesystem>
#include <set>

#include "hamindex/canon.hpp"
#include "hamindex/enumerate.hpp"
#include "hamindex/graph_io.hpp"
#include "hamindex/metrics.hpp"
#include "hamindex/verify.hpp"

using namespace hamindex;

namespace {

std::set<std::string> classes(const VerificationReport& r) {
  std::set<std::string> out;
  for (const auto& m : r.exceptional_matches) out.insert(m.code);
  return out;
}

bool has_class(const VerificationReport& r, const Graph& g) {
  return classes(r).count(canonical_form(g).hex()) > 0;
}

}  // namespace

TEST_CASE("theorem names round trip") {
  for (TheoremId id : all_theorems()) CHECK(parse_theorem_id(theorem_name(id)) == id);
  CHECK(parse_theorem_id("thm4.3") == TheoremId::Thm43);
  CHECK_THROWS_AS(parse_theorem_id("Thm9.9"), ParseError);
}

TEST_CASE("edge thresholds") {
  const auto a = edge_threshold(TheoremId::Lem23, 7, 2);
  CHECK(a.value == 14);
  CHECK_FALSE(a.strict);
  const auto b = edge_threshold(TheoremId::Lem41, 11, 1);
  CHECK(b.value == 40);
  CHECK(b.strict);
  const auto c = edge_threshold(TheoremId::Lem51, 5, 1);
  CHECK(c.value == 19);
  CHECK(c.strict);
  CHECK(edge_threshold(TheoremId::Lem24, 6, 1).value == 8);
  CHECK_THROWS_AS(edge_threshold(TheoremId::Lem41, 10, 1), ParameterOutOfStatedRange);
  CHECK(edge_threshold(TheoremId::Lem41, 10, 1, true).value == binom2(8) + 4);
  CHECK_THROWS_AS(edge_threshold(TheoremId::Thm43, 11, 1), UnsupportedFamily);
}

TEST_CASE("hamiltonicity edge lemma at n=7") {
  const auto r = verify_edge_lemma(TheoremId::Lem23, 7, 2);
  CHECK(r.violations.empty());
  CHECK(r.bookkeeping_ok());
  CHECK(r.scope_escapes == 0);
  CHECK(has_class(r, join(complete(3), empty(4))));
  CHECK(r.strategy == "full");
}

TEST_CASE("traceability edge lemma at n=6") {
  const auto r = verify_edge_lemma(TheoremId::Lem24, 6, 1);
  CHECK(r.violations.empty());
  CHECK(r.bookkeeping_ok());
  CHECK(has_class(r, complete_bipartite(2, 4).first));
}

TEST_CASE("subgraph lemma at n=11 by complements") {
  const auto r = verify_edge_lemma(TheoremId::Lem41, 11, 1);
  CHECK(r.strategy == "complement");
  CHECK(r.budget == 14);
  CHECK(r.violations.empty());
  CHECK(r.bookkeeping_ok());
  CHECK(r.hypothesis_hits > 0);
}

TEST_CASE("out-of-range runs need exploratory mode") {
  CHECK_THROWS_AS(verify_edge_lemma(TheoremId::Lem41, 9, 1), ParameterOutOfStatedRange);
  VerifyOptions opts;
  opts.exploratory = true;
  const auto r = verify_edge_lemma(TheoremId::Lem41, 9, 1, opts);
  CHECK(r.exploratory);
  CHECK(r.bookkeeping_ok());
}

TEST_CASE("index theorem with the two-degree list at n=7") {
  for (Branch b : {Branch::Wiener, Branch::Harary}) {
    const auto r = verify_index_theorem(TheoremId::Thm32, 7, 2, b);
    INFO(branch_name(b));
    CHECK(r.violations.empty());
    CHECK(r.bookkeeping_ok());
    CHECK(!r.exceptional_matches.empty());
  }
  // W(N^2_7) = 28.
  CHECK(wiener_index(build({FamilyTag::N, 7, 2, 0})) == 28);
}

TEST_CASE("unique exceptional class at n=11, k=1") {
  for (Branch b : {Branch::Wiener, Branch::Harary}) {
    const auto r = verify_index_theorem(TheoremId::Thm43, 11, 1, b);
    INFO(branch_name(b));
    CHECK(r.budget == 9);
    CHECK(r.violations.empty());
    CHECK(r.bookkeeping_ok());
    REQUIRE(classes(r).size() == 1);
    CHECK(has_class(r, build({FamilyTag::N, 11, 1, 0})));
  }
}

TEST_CASE("bipartite index theorem at half=5") {
  for (Branch b : {Branch::Wiener, Branch::Harary}) {
    const auto r = verify_index_theorem(TheoremId::Thm51Bip, 5, 1, b);
    INFO(branch_name(b));
    CHECK(r.budget == 4);
    CHECK(r.violations.empty());
    REQUIRE(classes(r).size() == 1);
    CHECK(has_class(r, build({FamilyTag::B, 5, 1, 0})));
  }
}

TEST_CASE("closure strategy agrees with complements") {
  VerifyOptions closure;
  closure.strategy = Strategy::Closure;
  for (int n : {11, 12}) {
    const auto a = verify_index_theorem(TheoremId::Thm43, n, 1, Branch::Wiener);
    const auto b = verify_index_theorem(TheoremId::Thm43, n, 1, Branch::Wiener, closure);
    CHECK(b.strategy == "closure");
    CHECK(b.violations.empty());
    CHECK(classes(a) == classes(b));
    CHECK(b.hypothesis_hits <= a.hypothesis_hits);
  }
  VerifyOptions explore = closure;
  explore.exploratory = true;
  for (int n = 6; n <= 9; ++n) {
    VerifyOptions c = explore;
    c.strategy = Strategy::Complement;
    const auto a = verify_index_theorem(TheoremId::Thm44, n, 1, Branch::Harary, c);
    const auto b = verify_index_theorem(TheoremId::Thm44, n, 1, Branch::Harary, explore);
    INFO(n);
    CHECK(a.violations.empty() == b.violations.empty());
    CHECK(classes(a) == classes(b));
  }
  CHECK_THROWS_AS(verify_index_theorem(TheoremId::Thm32, 7, 2, Branch::Wiener, closure), InfeasibleScope);
}

TEST_CASE("split runs merge to the same report") {
  VerifyOptions one;
  VerifyOptions many;
  many.splits = 4;
  many.jobs = 2;
  const auto a = verify_index_theorem(TheoremId::Thm35, 8, 1, Branch::Harary, one);
  const auto b = verify_index_theorem(TheoremId::Thm35, 8, 1, Branch::Harary, many);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("checkpoints resume") {
  const auto dir = std::filesystem::temp_directory_path() / "hamindex_ckpt_test";
  std::filesystem::remove_all(dir);
  VerifyOptions opts;
  opts.splits = 3;
  opts.checkpoint_dir = dir.string();
  const auto a = verify_edge_lemma(TheoremId::Lem24, 7, 1, opts);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()) == 3);
  const auto b = verify_edge_lemma(TheoremId::Lem24, 7, 1, opts);
  CHECK(report_to_json(a) == report_to_json(b));
  std::filesystem::remove_all(dir);
}

TEST_CASE("report JSON round trip") {
  const auto r = verify_edge_lemma(TheoremId::Lem23, 6, 2);
  CHECK(report_to_json(report_from_json(report_to_json(r))) == report_to_json(r));
  CHECK_THROWS_AS(report_from_json("{"), ParseError);
}

TEST_CASE("distance identities over small orders") {
  for (int n = 1; n <= 7; ++n) {
    const auto r = verify_fact(TheoremId::Fact31, n);
    CHECK(r.violations.empty());
    CHECK(r.bookkeeping_ok());
  }
  CHECK(verify_fact(TheoremId::Fact31, 5).hypothesis_hits == 21);
  for (int half = 1; half <= 3; ++half) CHECK(verify_fact(TheoremId::Fact51, half).violations.empty());
}

TEST_CASE("W and H branches scope consistently") {
  // Every H-branch hypothesis graph with e >= e(target) also satisfies the W branch.
  const int n = 8;
  const auto w = verify_index_theorem(TheoremId::Thm35, n, 1, Branch::Wiener);
  const auto h = verify_index_theorem(TheoremId::Thm35, n, 1, Branch::Harary);
  CHECK(w.budget >= 0);
  CHECK(h.budget >= 0);
  CHECK(w.hypothesis_hits <= h.hypothesis_hits);
}

TEST_CASE("audit of the exceptional lists") {
  const auto a = audit_exceptional_sets(12);
  CHECK(a.all_members_exceptional);
  for (const auto& row : a.rows) {
    INFO(row.list << "[" << row.item << "] " << row.name);
    CHECK(row.meets_min_degree);
    CHECK(row.wiener_hypothesis);
    CHECK(row.harary_hypothesis);
    CHECK_FALSE(row.property);
  }
  for (const auto& b : a.bounds) {
    INFO(b.name << " n=" << b.n);
    CHECK(b.ok);
  }
  bool k3_4k1 = false;
  for (const auto& row : a.rows)
    if (row.list == "G1" && row.n == 7 && row.item == 1) {
      k3_4k1 = true;
      CHECK(row.cert.kind == CertKind::CutWitness);
      CHECK(row.cert.cut_set.count() == 3);
      CHECK(row.cert.component_count == 4);
    }
  CHECK(k3_4k1);
  // W(K1 v (K7 + 2K1)) = 60.
  for (const auto& row : a.rows)
    if (row.list == "G2" && row.item == 0 && row.n == 10) CHECK(row.wiener == 60);
}

TEST_CASE("extremal search small cases") {
  const auto a = extremal_search(ExtremalProblem::MinWiener, ExtremalClass::NonHamiltonian, 7, 2);
  REQUIRE(a.found);
  CHECK(a.value <= Rational(28));
  CHECK(!a.argext.empty());
  for (const auto& g6 : a.argext) {
    const Graph g = from_graph6(g6);
    CHECK(Rational(wiener_index(g)) == a.value);
    CHECK_FALSE(is_hamiltonian(g).answer);
    CHECK(basic_stats(g).min_degree >= 2);
  }

  const auto b = extremal_search(ExtremalProblem::MinWiener, ExtremalClass::NonTraceable, 5, 1);
  REQUIRE(b.found);
  // Brute minimum over the same classes.
  Rational best;
  bool found = false;
  EnumFilter f;
  f.require_connected = true;
  enumerate_graphs(5, f, [&](const Graph& g) {
    if (is_traceable(g).answer) return;
    const Rational w(wiener_index(g));
    if (!found || w < best) best = w;
    found = true;
  });
  CHECK(b.value == best);

  const auto c = extremal_search(ExtremalProblem::BipartiteMinWiener, ExtremalClass::BipartiteNonHamiltonian, 3, 1);
  REQUIRE(c.family_value);
  CHECK(*c.family_value == Rational(25));
  CHECK(c.found);

  CHECK_THROWS_AS(extremal_search(ExtremalProblem::MinWiener, ExtremalClass::BipartiteNonHamiltonian, 5, 1),
                  ParameterOutOfRange);
  CHECK_THROWS_AS(extremal_search(ExtremalProblem::MinWiener, ExtremalClass::NonHamiltonian, 11, 1), InfeasibleScope);
}

TEST_CASE("extremal results are monotone in k") {
  for (auto p : {ExtremalProblem::MinWiener, ExtremalProblem::MaxHarary}) {
    std::vector<ExtremalResult> rs;
    for (int k = 1; k <= 3; ++k) rs.push_back(extremal_search(p, ExtremalClass::NonHamiltonian, 7, k));
    CHECK(extremal_monotone(rs));
  }
}
