// Acceptance run: one PASS/FAIL line per criterion, each against a wall-clock limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "hamindex/canon.hpp"
#include "hamindex/enumerate.hpp"
#include "hamindex/graph_io.hpp"
#include "hamindex/metrics.hpp"
#include "hamindex/verify.hpp"
#include "oracles.hpp"

using namespace hamindex;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

int failures = 0;

void criterion(int number, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("error: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) out.fail("exceeded time limit");
  if (!out.ok) ++failures;
  std::printf("[%s] %2d %-44s %8.2f s (limit %6.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", number, title, secs, limit_s,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

std::string where(const std::string& what, int n, int k = -1) {
  return what + " n=" + std::to_string(n) + (k >= 0 ? " k=" + std::to_string(k) : "");
}

std::set<std::string> match_classes(const VerificationReport& r) {
  std::set<std::string> s;
  for (const auto& m : r.exceptional_matches) s.insert(m.code);
  return s;
}

// Zero violations, identity holds, and every exceptional match is isomorphic to `target`.
void expect_unique_class(Outcome& out, const VerificationReport& r, const Graph& target) {
  const std::string at = where(r.theorem + " " + branch_name(r.branch), r.n, r.k);
  out.expect(r.violations.empty(), at + ": violations");
  out.expect(r.bookkeeping_ok(), at + ": bookkeeping");
  out.expect(!r.exceptional_matches.empty(), at + ": no exceptional class");
  for (const auto& m : r.exceptional_matches)
    out.expect(is_isomorphic(from_graph6(m.graph6), target), at + ": match not isomorphic to target");
}

void closed_forms(Outcome& out) {
  int members = 0;
  for (int k = 1; k <= 5; ++k)
    for (int n = 1; n <= 30; ++n) {
      const FamilySpec nspec{FamilyTag::N, n, k, 0};
      if (is_valid(nspec)) {
        ++members;
        const Graph g = build(nspec);
        const auto idx = distance_indices(g);
        const std::int64_t e = binom2(n - k) + static_cast<std::int64_t>(k) * k;
        out.expect(g.edge_count() == e, where("e(N)", n, k));
        out.expect(idx.wiener == diameter_two_wiener(n, e) && idx.harary == diameter_two_harary(n, e),
                   where("W/H(N)", n, k));
        const auto cf = closed_form_wh(nspec);
        out.expect(cf.e == e && cf.wiener == idx.wiener && cf.harary == idx.harary, where("closed form N", n, k));
      }
      const FamilySpec nb{FamilyTag::Nbar, n, k, 0};
      if (is_valid(nb)) {
        ++members;
        const Graph g = build(nb);
        const auto idx = distance_indices(g);
        const std::int64_t e = binom2(n - k - 1) + static_cast<std::int64_t>(k) * (k + 1);
        out.expect(g.edge_count() == e, where("e(Nbar)", n, k));
        out.expect(idx.wiener == diameter_two_wiener(n, e) && idx.harary == diameter_two_harary(n, e),
                   where("W/H(Nbar)", n, k));
        const auto cf = closed_form_wh(nb);
        out.expect(cf.e == e && cf.wiener == idx.wiener && cf.harary == idx.harary, where("closed form Nbar", n, k));
      }
      const FamilySpec bs{FamilyTag::B, n, k, 0};
      if (is_valid(bs) && 2 * n <= Graph::kCapacity) {
        ++members;
        const Graph g = build(bs);
        const auto idx = distance_indices(g);
        const std::int64_t e = static_cast<std::int64_t>(n) * (n - k) + static_cast<std::int64_t>(k) * k;
        out.expect(g.edge_count() == e, where("e(B)", n, k));
        out.expect(idx.wiener == bipartite_wiener(n, e) && idx.harary == bipartite_harary(n, e),
                   where("W/H(B)", n, k));
        const auto cf = closed_form_wh(bs);
        out.expect(cf.e == e && cf.wiener == idx.wiener && cf.harary == idx.harary, where("closed form B", n, k));
      }
    }
  std::printf("     closed forms: %d family members\n", members);
}

void edge_lemmas(Outcome& out) {
  struct Job {
    TheoremId id;
    int first;
    int k;
    bool g1;
  };
  for (const Job& job : {Job{TheoremId::Lem23, 5, 2, true}, Job{TheoremId::Lem24, 4, 1, false}}) {
    std::set<std::pair<int, std::string>> seen;  // (order, canonical code)
    for (int n = job.first; n <= 9; ++n) {
      const auto r = verify_edge_lemma(job.id, n, job.k);
      out.expect(r.violations.empty(), where(r.theorem + " violations", n));
      out.expect(r.bookkeeping_ok() && r.scope_escapes == 0, where(r.theorem + " bookkeeping", n));
      for (const auto& c : match_classes(r)) seen.insert({n, c});
    }
    for (int item = 1; item < kExceptionalListSize; ++item) {
      const int order = job.g1 ? g1_item_order(item) : g2_item_order(item);
      if (order < 6 || order > 9) continue;
      const Graph g = build({job.g1 ? FamilyTag::G1Item : FamilyTag::G2Item, order, 0, item});
      out.expect(seen.count({order, canonical_form(g).hex()}) == 1,
                 std::string(job.g1 ? "G1" : "G2") + " item " + std::to_string(item) + " not produced");
    }
  }
}

void small_index_theorems(Outcome& out) {
  VerifyOptions opts;
  opts.strategy = Strategy::Complement;
  for (auto [id, first, k] : {std::tuple{TheoremId::Thm32, 5, 2}, std::tuple{TheoremId::Thm35, 4, 1}})
    for (int n = first; n <= 9; ++n)
      for (Branch b : {Branch::Wiener, Branch::Harary}) {
        const auto r = verify_index_theorem(id, n, k, b, opts);
        const std::string at = where(r.theorem + " " + branch_name(b), n);
        out.expect(r.violations.empty(), at + ": violations");
        out.expect(r.bookkeeping_ok(), at + ": bookkeeping");
      }
}

void solver_oracle(Outcome& out) {
  int classes = 0;
  for (int n = 1; n <= 7; ++n)
    enumerate_graphs(n, {}, [&](const Graph& g) {
      ++classes;
      for (HamMode mode : {HamMode::Cycle, HamMode::Path}) {
        const auto r = solve(g, mode);
        const bool cyc = mode == HamMode::Cycle;
        out.expect(r.answer == oracle::permutation_hamiltonian(g, cyc), "solver disagrees with oracle on " + to_graph6(g));
        try {
          validate_certificate(g, mode, r);
        } catch (const std::logic_error&) {
          out.fail("certificate rejected for " + to_graph6(g));
        }
      }
    });
  out.expect(classes == 1 + 2 + 4 + 11 + 34 + 156 + 1044, "class count");
  std::printf("     solver: %d classes, both modes\n", classes);
}

void extremal(Outcome& out) {
  auto check_result = [&](const ExtremalResult& r) {
    const std::string at = where(problem_name(r.problem) + " " + class_name(r.graph_class), r.n, r.k);
    out.expect(!r.family.empty(), at + ": no family comparison");
    if (!r.found) return;
    const HamMode mode = r.graph_class == ExtremalClass::NonTraceable ? HamMode::Path : HamMode::Cycle;
    const bool min = r.problem == ExtremalProblem::MinWiener || r.problem == ExtremalProblem::BipartiteMinWiener;
    for (const auto& g6 : r.argext) {
      const Graph g = from_graph6(g6);
      out.expect(is_connected(g) && basic_stats(g).min_degree >= r.k, at + ": argext outside the class");
      out.expect(!solve(g, mode).answer, at + ": argext has the property");
      out.expect((min ? Rational(wiener_index(g)) : harary_index(g)) == r.value, at + ": argext value");
      if (r.graph_class == ExtremalClass::BipartiteNonHamiltonian)
        out.expect(has_balanced_bipartition(g, r.n), at + ": argext not balanced bipartite");
    }
  };
  for (auto p : {ExtremalProblem::MinWiener, ExtremalProblem::MaxHarary})
    for (auto c : {ExtremalClass::NonHamiltonian, ExtremalClass::NonTraceable})
      for (int n = 2; n <= 8; ++n) {
        std::vector<ExtremalResult> by_k;
        for (int k = 0; k <= 2; ++k) {
          by_k.push_back(extremal_search(p, c, n, k));
          check_result(by_k.back());
        }
        out.expect(extremal_monotone(by_k), where(problem_name(p) + " not monotone", n));
      }
  for (auto p : {ExtremalProblem::BipartiteMinWiener, ExtremalProblem::BipartiteMaxHarary})
    for (int half = 2; half <= 4; ++half) {
      const auto r = extremal_search(p, ExtremalClass::BipartiteNonHamiltonian, half, 1);
      check_result(r);
      out.expect(r.family_value.has_value(), where(problem_name(p) + " missing B value", half));
    }
}

}  // namespace

int main() {
  criterion(1, "closed forms for k <= 5, n <= 30", 10, closed_forms);

  criterion(2, "distance identities, connected n <= 9", 600, [](Outcome& out) {
    const std::int64_t connected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};
    for (int n = 1; n <= 9; ++n) {
      const auto r = verify_fact(TheoremId::Fact31, n);
      out.expect(r.violations.empty(), where("violations", n));
      out.expect(r.hypothesis_hits == connected[n], where("connected class count", n));
    }
  });

  criterion(3, "bipartite distance identities, half <= 4", 300, [](Outcome& out) {
    for (int half = 1; half <= 4; ++half) {
      const auto r = verify_fact(TheoremId::Fact51, half);
      out.expect(r.violations.empty(), where("violations", half));
      out.expect(r.hypothesis_hits > 0, where("no connected classes", half));
    }
  });

  criterion(4, "edge lemmas with the nine-graph lists", 900, edge_lemmas);
  criterion(5, "index theorems for the lists, n <= 9", 600, small_index_theorems);

  criterion(6, "Hamiltonian index theorem, k=1, n=11,12", 1800, [](Outcome& out) {
    for (int n : {11, 12})
      for (Branch b : {Branch::Wiener, Branch::Harary}) {
        const auto r = verify_index_theorem(TheoremId::Thm43, n, 1, b);
        out.expect(r.budget == n - 2, where("budget", n));
        expect_unique_class(out, r, build({FamilyTag::N, n, 1, 0}));
      }
  });

  criterion(7, "traceable index theorem, k=1, n=16,17", 3600, [](Outcome& out) {
    for (int n : {16, 17})
      for (Branch b : {Branch::Wiener, Branch::Harary}) {
        const auto r = verify_index_theorem(TheoremId::Thm44, n, 1, b);
        out.expect(r.budget == binom2(n) - edge_count({FamilyTag::Nbar, n, 1, 0}), where("budget", n));
        out.expect(!r.exploratory, where("run was exploratory", n));
        expect_unique_class(out, r, build({FamilyTag::Nbar, n, 1, 0}));
      }
  });

  criterion(8, "bipartite index theorem, k=1, half=4,5", 600, [](Outcome& out) {
    for (int half : {4, 5})
      for (Branch b : {Branch::Wiener, Branch::Harary}) {
        const auto r = verify_index_theorem(TheoremId::Thm51Bip, half, 1, b);
        out.expect(r.budget == half - 1, where("budget", half));
        expect_unique_class(out, r, build({FamilyTag::B, half, 1, 0}));
      }
  });

  criterion(9, "audit of the exceptional lists", 60, [](Outcome& out) {
    const auto a = audit_exceptional_sets(12);
    std::set<std::pair<std::string, int>> items;
    for (const auto& r : a.rows) {
      const std::string at = r.list + "[" + std::to_string(r.item) + "] n=" + std::to_string(r.n);
      items.insert({r.list, r.item});
      out.expect(!r.property, at + " has the property");
      out.expect(r.meets_min_degree, at + " minimum degree");
      out.expect(r.wiener_hypothesis && r.harary_hypothesis, at + " misses the hypotheses");
    }
    out.expect(items.size() == 2 * kExceptionalListSize, "not every list item audited");
    for (const auto& b : a.bounds)
      out.expect(b.ok, b.name + " at n=" + std::to_string(b.n) + ": " + b.expected + " vs " + b.actual);
    int unequal = 0;
    for (const auto& r : a.rows) unequal += r.edge_equality ? 0 : 1;
    std::printf("     audit: %zu rows, %d with e != e(target) recorded as findings\n", a.rows.size(), unequal);
  });

  criterion(10, "solver against the permutation oracle, n <= 7", 300, solver_oracle);
  criterion(11, "extremal search, n <= 8 and half <= 4", 1200, extremal);

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
