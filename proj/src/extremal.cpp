#include <algorithm>
#include <map>

#include "hamindex/canon.hpp"
#include "hamindex/enumerate.hpp"
#include "hamindex/errors.hpp"
#include "hamindex/graph_io.hpp"
#include "hamindex/metrics.hpp"
#include "hamindex/verify.hpp"

namespace hamindex {
namespace {

bool minimizes(ExtremalProblem p) { return p == ExtremalProblem::MinWiener || p == ExtremalProblem::BipartiteMinWiener; }
bool bipartite(ExtremalProblem p) {
  return p == ExtremalProblem::BipartiteMinWiener || p == ExtremalProblem::BipartiteMaxHarary;
}

Rational objective(ExtremalProblem p, const Graph& g) {
  return minimizes(p) ? Rational(wiener_index(g)) : harary_index(g);
}

}  // namespace

std::string problem_name(ExtremalProblem p) {
  switch (p) {
    case ExtremalProblem::MinWiener:
      return "1.1-minW";
    case ExtremalProblem::MaxHarary:
      return "1.1-maxH";
    case ExtremalProblem::BipartiteMinWiener:
      return "1.2-minW";
    case ExtremalProblem::BipartiteMaxHarary:
      return "1.2-maxH";
  }
  return "?";
}

ExtremalProblem parse_problem(const std::string& text) {
  for (auto p : {ExtremalProblem::MinWiener, ExtremalProblem::MaxHarary, ExtremalProblem::BipartiteMinWiener,
                 ExtremalProblem::BipartiteMaxHarary})
    if (problem_name(p) == text) return p;
  throw ParseError("unknown problem '" + text + "' (expected 1.1-minW, 1.1-maxH, 1.2-minW or 1.2-maxH)");
}

std::string class_name(ExtremalClass c) {
  switch (c) {
    case ExtremalClass::NonHamiltonian:
      return "nonHamiltonian";
    case ExtremalClass::NonTraceable:
      return "nonTraceable";
    case ExtremalClass::BipartiteNonHamiltonian:
      return "bipartiteNonHamiltonian";
  }
  return "?";
}

ExtremalClass parse_class(const std::string& text) {
  for (auto c : {ExtremalClass::NonHamiltonian, ExtremalClass::NonTraceable, ExtremalClass::BipartiteNonHamiltonian})
    if (class_name(c) == text) return c;
  throw ParseError("unknown graph class '" + text + "'");
}

ExtremalResult extremal_search(ExtremalProblem problem, ExtremalClass cls, int n, int k, const VerifyOptions& opts) {
  if (bipartite(problem) != (cls == ExtremalClass::BipartiteNonHamiltonian))
    throw ParameterOutOfRange(problem_name(problem) + " does not apply to the class " + class_name(cls));
  if (k < 0 || n < 1) throw ParameterOutOfRange("need n >= 1 and k >= 0");
  const HamMode mode = cls == ExtremalClass::NonTraceable ? HamMode::Path : HamMode::Cycle;

  ExtremalResult r;
  r.problem = problem;
  r.graph_class = cls;
  r.n = n;
  r.k = k;
  std::map<CanonicalForm, Graph> best;  // canonical code -> canonical graph

  auto consider = [&](const Graph& g) {
    if (!is_connected(g) || basic_stats(g).min_degree < k) return;
    if (solve(g, mode, opts.solver).answer) return;
    ++r.class_size;
    const Rational v = objective(problem, g);
    const bool better = !r.found || (minimizes(problem) ? v < r.value : v > r.value);
    if (better) {
      r.found = true;
      r.value = v;
      best.clear();
    }
    if (v == r.value) best.emplace(canonical_form(g), canonical_graph(g));
  };

  if (bipartite(problem)) {
    if (n > 5) throw InfeasibleScope("bipartite extremal search is limited to half <= 5");
    enumerate_balanced_bipartite(n, n * n, k, [&](const Graph& g, const Bipartition&) { consider(g); });
  } else {
    if (n > 9) throw InfeasibleScope("extremal search is limited to n <= 9");
    EnumFilter filter;
    filter.min_degree = k;
    filter.require_connected = true;
    enumerate_graphs(n, filter, consider);
  }
  for (const auto& [code, g] : best) r.argext.push_back(to_graph6(g));

  FamilySpec family;
  switch (cls) {
    case ExtremalClass::NonHamiltonian:
      family = {FamilyTag::N, n, k, 0};
      r.family_in_range = k >= 1 && n >= 6 * k + 5;
      break;
    case ExtremalClass::NonTraceable:
      family = {FamilyTag::Nbar, n, k, 0};
      r.family_in_range = k >= 1 && n >= 6 * k + 10;
      break;
    case ExtremalClass::BipartiteNonHamiltonian:
      family = {FamilyTag::B, n, k, 0};
      r.family_in_range = k >= 1 && n >= 2 * k + 2;
      break;
  }
  r.family = family.str();
  if (k >= 1 && is_valid(family)) {
    const Graph fg = build(family);
    if (is_connected(fg)) r.family_value = objective(problem, fg);
  }
  if (!r.found) r.notes.emplace_back("the class is empty");
  if (!r.family_value) {
    r.notes.push_back(r.family + " is not defined or not connected here");
  } else if (!r.family_in_range) {
    r.notes.push_back("(n, k) is outside the range where " + r.family + " is claimed extremal; shown for reference");
  } else if (r.found && *r.family_value != r.value) {
    r.notes.push_back("optimum differs from the value at " + r.family);
  } else if (r.found) {
    r.notes.push_back("optimum equals the value at " + r.family);
  }
  return r;
}

bool extremal_monotone(const std::vector<ExtremalResult>& by_k) {
  std::vector<const ExtremalResult*> found;
  for (const auto& r : by_k)
    if (r.found) found.push_back(&r);
  std::sort(found.begin(), found.end(), [](auto a, auto b) { return a->k < b->k; });
  for (std::size_t i = 1; i < found.size(); ++i) {
    const bool min = minimizes(found[i]->problem);
    if (min ? found[i]->value < found[i - 1]->value : found[i]->value > found[i - 1]->value) return false;
  }
  return true;
}

}  // namespace hamindex
