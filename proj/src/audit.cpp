#include <sstream>

#include "hamindex/metrics.hpp"
#include "hamindex/verify.hpp"

namespace hamindex {
namespace {

struct Target {
  std::string name;
  std::int64_t e = 0;
  std::int64_t wiener = 0;
  Rational harary;
};

Target target_of(const FamilySpec& spec) {
  const auto idx = distance_indices(build(spec));
  return {spec.str(), edge_count(spec), idx.wiener, idx.harary};
}

AuditRow audit_member(const std::string& list, const ExceptionalMember& m) {
  const bool hamiltonicity = list == "G1";
  const int n = m.graph.order();
  const Target t = target_of(hamiltonicity ? FamilySpec{FamilyTag::N, n, 2, 0} : FamilySpec{FamilyTag::Nbar, n, 1, 0});
  const auto idx = distance_indices(m.graph);
  const auto result = solve(m.graph, hamiltonicity ? HamMode::Cycle : HamMode::Path);
  validate_certificate(m.graph, hamiltonicity ? HamMode::Cycle : HamMode::Path, result);

  AuditRow row;
  row.list = list;
  row.item = m.item;
  row.name = m.name;
  row.n = n;
  row.e = m.graph.edge_count();
  row.wiener = idx.wiener;
  row.harary = idx.harary;
  row.min_degree = basic_stats(m.graph).min_degree;
  row.diameter = idx.diameter;
  row.property = result.answer;
  row.cert = result.cert;
  row.target = t.name;
  row.target_e = t.e;
  row.target_wiener = t.wiener;
  row.target_harary = t.harary;
  row.meets_min_degree = row.min_degree >= (hamiltonicity ? 2 : 1);
  row.wiener_hypothesis = row.wiener <= t.wiener;
  row.harary_hypothesis = row.harary >= t.harary;
  row.edge_equality = row.e == t.e;
  return row;
}

std::string describe(const AuditRow& r) {
  return r.list + "[" + std::to_string(r.item) + "] " + r.name + " (n=" + std::to_string(r.n) + ")";
}

}  // namespace

AuditReport audit_exceptional_sets(int max_parametric_order) {
  AuditReport out;
  for (const std::string list : {"G1", "G2"}) {
    const bool g1 = list == "G1";
    const int first = g1 ? 5 : 4;
    for (int n = first; n <= max_parametric_order; ++n)
      out.rows.push_back(audit_member(list, (g1 ? g1_members(n) : g2_members(n)).front()));
    const auto catalog = g1 ? g1_catalog(first) : g2_catalog(first);
    for (std::size_t i = 1; i < catalog.size(); ++i) out.rows.push_back(audit_member(list, catalog[i]));
  }

  out.all_members_exceptional = true;
  for (const auto& r : out.rows) {
    if (r.property) {
      out.all_members_exceptional = false;
      out.findings.push_back(describe(r) + " has the property it is listed as lacking");
    }
    if (!r.meets_min_degree) out.findings.push_back(describe(r) + " has minimum degree " + std::to_string(r.min_degree));
    if (!r.wiener_hypothesis)
      out.findings.push_back(describe(r) + ": W = " + std::to_string(r.wiener) + " exceeds W(" + r.target +
                             ") = " + std::to_string(r.target_wiener));
    if (!r.harary_hypothesis)
      out.findings.push_back(describe(r) + ": H = " + r.harary.str() + " is below H(" + r.target +
                             ") = " + r.target_harary.str());
    if (!r.edge_equality)
      out.findings.push_back(describe(r) + ": e = " + std::to_string(r.e) + " differs from e(" + r.target +
                             ") = " + std::to_string(r.target_e) + ", so the equality W = n(n-1) - e(target) "
                             "does not hold for it");
  }

  for (int n = 4; n <= 30; ++n) {
    const auto idx = distance_indices(build({FamilyTag::Nbar, n, 1, 0}));
    const std::int64_t w = static_cast<std::int64_t>(n + 5) * (n - 2) / 2;
    const Rational h(BigInt(static_cast<std::int64_t>(n) * n - 3 * n + 5), BigInt(2));
    out.bounds.push_back({"W(Nbar^1_n) = (n+5)(n-2)/2", n, std::to_string(w), std::to_string(idx.wiener),
                          w == idx.wiener});
    out.bounds.push_back({"H(Nbar^1_n) = (n^2 - 3n + 5)/2", n, h.str(), idx.harary.str(), h == idx.harary});
  }

  // The bipartite H identity, against the form with coefficient 3 on (n^2 - e).
  for (int half = 2; half <= 8; ++half)
    for (int k = 1; 2 * k <= half; ++k) {
      const FamilySpec spec{FamilyTag::B, half, k, 0};
      if (!is_valid(spec)) continue;
      const auto idx = distance_indices(build(spec));
      const std::int64_t e = edge_count(spec);
      const std::int64_t nn = half;
      const Rational third = Rational(e) + Rational(nn * nn - e) / Rational(3) + Rational(binom2(nn));
      const Rational triple = Rational(e) + Rational(3 * (nn * nn - e)) + Rational(binom2(nn));
      out.bounds.push_back({"H(" + spec.str() + ") = e + (n^2 - e)/3 + C(n,2)", half, third.str(), idx.harary.str(),
                            third == idx.harary});
      if (triple != idx.harary && half == 4 && k == 1)
        out.findings.push_back("H(B) written as e + 3(n^2 - e) + C(n,2) gives " + triple.str() + " at " + spec.str() +
                               ", computed H is " + idx.harary.str() + "; the coefficient should be 1/3");
    }
  return out;
}

}  // namespace hamindex
