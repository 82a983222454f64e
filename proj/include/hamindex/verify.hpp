#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamindex/families.hpp"
#include "hamindex/hamilton.hpp"
#include "hamindex/rational.hpp"

namespace hamindex {

/// The claims the harness knows how to check. Each has a hypothesis, a
/// conclusion and an exceptional set (possibly empty).
enum class TheoremId {
  Fact31,
  Fact51,
  Thm21,
  Thm22,
  Lem23,
  Lem24,
  Thm32,
  Thm33,
  Thm34,
  Thm35,
  Lem41,
  Lem42,
  Thm43,
  Thm44,
  Lem51,
  Thm51Bip,
};

/// Identifier as used on the command line, e.g. "Lem2.3", "Thm5.1bip".
std::string theorem_name(TheoremId id);
/// Throws ParseError for unknown names.
TheoremId parse_theorem_id(const std::string& text);
std::vector<TheoremId> all_theorems();

enum class Branch { None, Wiener, Harary };
std::string branch_name(Branch b);

enum class Strategy {
  Auto,
  Full,         // every class of order n
  Complement,   // complements with at most `budget` edges
  Closure,      // closed graphs only (see enumerate_closed_dense)
  Bipartite,    // subgraphs of K_{n,n} missing at most `budget` edges
};
std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& text);

/// Edge hypothesis of an edge lemma: e > value when strict, e >= value otherwise.
struct EdgeThreshold {
  std::int64_t value = 0;
  bool strict = false;

  std::int64_t min_edges() const { return strict ? value + 1 : value; }
};

/// Whether (n, k) satisfies the stated order and degree ranges.
bool in_stated_range(TheoremId id, int n, int k);

/// The degree parameter a claim is stated for (2 for Lem2.3, 1 for Lem2.4 and
/// the connected-traceability claims), or -1 when k is free.
int fixed_k(TheoremId id);

/// Throws ParameterOutOfStatedRange unless in range or `allow_out_of_range`;
/// UnsupportedFamily for ids without an edge hypothesis.
EdgeThreshold edge_threshold(TheoremId id, int n, int k, bool allow_out_of_range = false);

struct VerifyOptions {
  bool exploratory = false;  // allow orders outside the stated range
  Strategy strategy = Strategy::Auto;
  int jobs = 1;
  int splits = 0;                 // 0 means `jobs`
  double max_estimated_classes = 2e7;
  std::string checkpoint_dir;     // empty disables checkpointing
  SolverOptions solver;
};

struct ExceptionalMatch {
  std::string code;  // canonical form, hex
  std::string graph6;
  std::string matched;  // name of the exceptional graph it matched

  friend bool operator==(const ExceptionalMatch&, const ExceptionalMatch&) = default;
};

struct VerificationReport {
  std::string theorem;
  Branch branch = Branch::None;
  int n = 0;
  int k = 0;
  std::string strategy;
  std::int64_t budget = -1;  // complement / missing-edge budget, -1 if unused
  bool exploratory = false;
  std::int64_t examined = 0;
  std::int64_t hypothesis_hits = 0;
  std::int64_t conclusion_holds = 0;
  std::vector<ExceptionalMatch> exceptional_matches;
  std::vector<std::string> violations;  // graph6
  /// Hypothesis graphs with fewer edges than the scoping bound predicts;
  /// only measurable under the full strategy and always expected to be 0.
  std::int64_t scope_escapes = 0;
  /// Emitted without isomorphism dedup (closure strategy above 16 vertices).
  std::int64_t undeduplicated = 0;
  std::vector<std::string> interpretation_notes;

  bool bookkeeping_ok() const {
    return hypothesis_hits == conclusion_holds + static_cast<std::int64_t>(exceptional_matches.size()) +
                                  static_cast<std::int64_t>(violations.size());
  }
  /// Associative, commutative merge of two partial reports of the same run.
  void merge(const VerificationReport& other);
  /// Sorts lists so that output does not depend on split order.
  void normalize();
};

/// Edge lemmas: Thm2.1, Thm2.2, Lem2.3, Lem2.4, Lem4.1, Lem4.2, Lem5.1.
VerificationReport verify_edge_lemma(TheoremId id, int n, int k, const VerifyOptions& opts = {});

/// Index theorems: Thm3.2, Thm3.3, Thm3.4, Thm3.5, Thm4.3, Thm4.4, Thm5.1bip.
/// Thm3.3 only has an H branch and Thm3.4 only a W branch.
VerificationReport verify_index_theorem(TheoremId id, int n, int k, Branch branch, const VerifyOptions& opts = {});

/// Fact3.1 over connected graphs of order n, Fact5.1 over connected balanced
/// bipartite graphs of half-order n.
VerificationReport verify_fact(TheoremId id, int n, const VerifyOptions& opts = {});

/// Every report the id produces at (n, k): one per branch for index theorems.
std::vector<VerificationReport> verify(TheoremId id, int n, int k, const VerifyOptions& opts = {});

// ---------------------------------------------------------------------------
// Audit of the exceptional lists.

struct AuditRow {
  std::string list;  // "G1" or "G2"
  int item = 0;
  std::string name;
  int n = 0;
  std::int64_t e = 0;
  std::int64_t wiener = 0;
  Rational harary;
  int min_degree = 0;
  int diameter = 0;
  bool property = false;  // Hamiltonian (G1) or traceable (G2)
  HamCertificate cert;
  std::string target;  // N^2_n or Nbar^1_n
  std::int64_t target_e = 0;
  std::int64_t target_wiener = 0;
  Rational target_harary;
  bool meets_min_degree = false;
  bool wiener_hypothesis = false;  // W <= W(target)
  bool harary_hypothesis = false;  // H >= H(target)
  bool edge_equality = false;      // e == e(target)
};

struct BoundCheck {
  std::string name;
  int n = 0;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  std::vector<BoundCheck> bounds;
  std::vector<std::string> findings;
  bool all_members_exceptional = false;  // every member lacks its property
};

/// Parametric members are audited at every order from their smallest valid
/// order up to `max_parametric_order`.
AuditReport audit_exceptional_sets(int max_parametric_order = 12);

// ---------------------------------------------------------------------------
// Extremal values.

enum class ExtremalProblem { MinWiener, MaxHarary, BipartiteMinWiener, BipartiteMaxHarary };
enum class ExtremalClass { NonHamiltonian, NonTraceable, BipartiteNonHamiltonian };

std::string problem_name(ExtremalProblem p);
ExtremalProblem parse_problem(const std::string& text);
std::string class_name(ExtremalClass c);
ExtremalClass parse_class(const std::string& text);

struct ExtremalResult {
  ExtremalProblem problem = ExtremalProblem::MinWiener;
  ExtremalClass graph_class = ExtremalClass::NonHamiltonian;
  int n = 0;  // order, or half-order for the bipartite problems
  int k = 0;
  bool found = false;  // false when the class is empty
  Rational value;
  std::int64_t class_size = 0;
  std::vector<std::string> argext;  // graph6 of the canonical graphs attaining the value
  std::string family;               // comparison graph, e.g. "N:n=9,k=2"
  std::optional<Rational> family_value;
  bool family_in_range = false;  // comparison is only meaningful inside the stated range
  std::vector<std::string> notes;
};

/// Exact optimum over connected members of the class with min degree >= k.
/// Full enumeration for n <= 9 (general) or half <= 5 (bipartite); throws
/// InfeasibleScope beyond.
ExtremalResult extremal_search(ExtremalProblem problem, ExtremalClass cls, int n, int k, const VerifyOptions& opts = {});

/// True when results for k = 1..K are monotone: min W never decreases and
/// max H never increases as k grows (empty classes are skipped).
bool extremal_monotone(const std::vector<ExtremalResult>& by_k);

// ---------------------------------------------------------------------------
// Serialization.

inline constexpr const char* kReportSchema = "hamindex.report/1";

std::string to_json(const std::vector<VerificationReport>& reports);
std::string to_json(const AuditReport& audit);
std::string to_json(const std::vector<ExtremalResult>& results);

std::string to_table(const std::vector<VerificationReport>& reports);
std::string to_table(const AuditReport& audit);
std::string to_table(const std::vector<ExtremalResult>& results);

std::string to_csv(const std::vector<VerificationReport>& reports);
std::string to_csv(const AuditReport& audit);
std::string to_csv(const std::vector<ExtremalResult>& results);

VerificationReport report_from_json(const std::string& text);
std::string report_to_json(const VerificationReport& report);

}  // namespace hamindex
