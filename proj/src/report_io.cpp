#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hamindex/errors.hpp"
#include "hamindex/verify.hpp"

namespace hamindex {
namespace {

using Json = nlohmann::ordered_json;

Branch parse_branch(const std::string& s) {
  if (s == "W") return Branch::Wiener;
  if (s == "H") return Branch::Harary;
  return Branch::None;
}

Json report_json(const VerificationReport& r) {
  Json matches = Json::array();
  for (const auto& m : r.exceptional_matches)
    matches.push_back({{"code", m.code}, {"graph6", m.graph6}, {"matched", m.matched}});
  return {
      {"theorem", r.theorem},
      {"branch", branch_name(r.branch)},
      {"scope", {{"n", r.n}, {"k", r.k}, {"strategy", r.strategy}, {"budget", r.budget}, {"examined", r.examined}}},
      {"exploratory", r.exploratory},
      {"hypothesis_hits", r.hypothesis_hits},
      {"conclusion_holds", r.conclusion_holds},
      {"exceptional_matches", matches},
      {"violations", r.violations},
      {"scope_escapes", r.scope_escapes},
      {"undeduplicated", r.undeduplicated},
      {"bookkeeping_ok", r.bookkeeping_ok()},
      {"interpretation_notes", r.interpretation_notes},
  };
}

Json cert_json(const HamCertificate& c) {
  Json j = {{"kind", cert_kind_name(c.kind)}};
  if (!c.sequence.empty()) j["sequence"] = c.sequence;
  if (c.kind == CertKind::CutWitness) {
    std::vector<int> cut;
    for (int v : c.cut_set) cut.push_back(v);
    j["cut_set"] = cut;
    j["components"] = c.component_count;
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename... Ts>
std::string csv_row(const Ts&... fields) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const auto& f) {
    if (!first) os << ',';
    first = false;
    std::ostringstream cell;
    cell << f;
    os << csv_field(cell.str());
  };
  (put(fields), ...);
  os << '\n';
  return os.str();
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

// Plain column-aligned text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> w(rows_[0].size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream os;
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << r[i];
        if (i + 1 < r.size()) os << std::string(w[i] - r[i].size() + 2, ' ');
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::size_t distinct_classes(const VerificationReport& r) {
  std::vector<std::string> codes;
  for (const auto& m : r.exceptional_matches) codes.push_back(m.code);
  std::sort(codes.begin(), codes.end());
  return static_cast<std::size_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

}  // namespace

std::string report_to_json(const VerificationReport& report) { return report_json(report).dump(2); }

VerificationReport report_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    VerificationReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.branch = parse_branch(j.at("branch").get<std::string>());
    const auto& s = j.at("scope");
    r.n = s.at("n").get<int>();
    r.k = s.at("k").get<int>();
    r.strategy = s.at("strategy").get<std::string>();
    r.budget = s.at("budget").get<std::int64_t>();
    r.examined = s.at("examined").get<std::int64_t>();
    r.exploratory = j.at("exploratory").get<bool>();
    r.hypothesis_hits = j.at("hypothesis_hits").get<std::int64_t>();
    r.conclusion_holds = j.at("conclusion_holds").get<std::int64_t>();
    for (const auto& m : j.at("exceptional_matches"))
      r.exceptional_matches.push_back(
          {m.at("code").get<std::string>(), m.at("graph6").get<std::string>(), m.at("matched").get<std::string>()});
    r.violations = j.at("violations").get<std::vector<std::string>>();
    r.scope_escapes = j.at("scope_escapes").get<std::int64_t>();
    r.undeduplicated = j.at("undeduplicated").get<std::int64_t>();
    r.interpretation_notes = j.at("interpretation_notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
}

std::string to_json(const std::vector<VerificationReport>& reports) {
  Json out = {{"schema", kReportSchema}, {"reports", Json::array()}};
  for (const auto& r : reports) out["reports"].push_back(report_json(r));
  return out.dump(2) + "\n";
}

std::string to_json(const AuditReport& audit) {
  Json rows = Json::array();
  for (const auto& r : audit.rows)
    rows.push_back({{"list", r.list},
                    {"item", r.item},
                    {"name", r.name},
                    {"n", r.n},
                    {"e", r.e},
                    {"wiener", r.wiener},
                    {"harary", r.harary.str()},
                    {"min_degree", r.min_degree},
                    {"diameter", r.diameter},
                    {"property", r.property},
                    {"certificate", cert_json(r.cert)},
                    {"target", r.target},
                    {"target_e", r.target_e},
                    {"target_wiener", r.target_wiener},
                    {"target_harary", r.target_harary.str()},
                    {"meets_min_degree", r.meets_min_degree},
                    {"wiener_hypothesis", r.wiener_hypothesis},
                    {"harary_hypothesis", r.harary_hypothesis},
                    {"edge_equality", r.edge_equality}});
  Json bounds = Json::array();
  for (const auto& b : audit.bounds)
    bounds.push_back({{"name", b.name}, {"n", b.n}, {"expected", b.expected}, {"actual", b.actual}, {"ok", b.ok}});
  Json out = {{"schema", kReportSchema},
              {"audit", {{"rows", rows},
                         {"bounds", bounds},
                         {"findings", audit.findings},
                         {"all_members_exceptional", audit.all_members_exceptional}}}};
  return out.dump(2) + "\n";
}

std::string to_json(const std::vector<ExtremalResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json j = {{"problem", problem_name(r.problem)},
              {"class", class_name(r.graph_class)},
              {"n", r.n},
              {"k", r.k},
              {"found", r.found},
              {"value", r.found ? Json(r.value.str()) : Json(nullptr)},
              {"class_size", r.class_size},
              {"argext", r.argext},
              {"family", r.family},
              {"family_value", r.family_value ? Json(r.family_value->str()) : Json(nullptr)},
              {"family_in_range", r.family_in_range},
              {"notes", r.notes}};
    arr.push_back(j);
  }
  Json out = {{"schema", kReportSchema}, {"extremal", arr}, {"monotone_in_k", extremal_monotone(results)}};
  return out.dump(2) + "\n";
}

std::string to_table(const std::vector<VerificationReport>& reports) {
  Table t({"theorem", "branch", "n", "k", "strategy", "budget", "examined", "hits", "holds", "exceptional", "classes",
           "violations", "exploratory"});
  for (const auto& r : reports)
    t.add({r.theorem, branch_name(r.branch), std::to_string(r.n), std::to_string(r.k), r.strategy,
           std::to_string(r.budget), std::to_string(r.examined), std::to_string(r.hypothesis_hits),
           std::to_string(r.conclusion_holds), std::to_string(r.exceptional_matches.size()),
           std::to_string(distinct_classes(r)), std::to_string(r.violations.size()), yes(r.exploratory)});
  std::string out = t.str();
  for (const auto& r : reports)
    for (const auto& v : r.violations) out += "violation " + r.theorem + " n=" + std::to_string(r.n) + ": " + v + "\n";
  return out;
}

std::string to_table(const AuditReport& audit) {
  Table t({"list", "item", "name", "n", "e", "W", "H", "delta", "diam", "property", "certificate", "target", "W<=",
           "H>=", "e="});
  for (const auto& r : audit.rows)
    t.add({r.list, std::to_string(r.item), r.name, std::to_string(r.n), std::to_string(r.e), std::to_string(r.wiener),
           r.harary.str(), std::to_string(r.min_degree), std::to_string(r.diameter), yes(r.property),
           cert_kind_name(r.cert.kind), r.target, yes(r.wiener_hypothesis), yes(r.harary_hypothesis),
           yes(r.edge_equality)});
  std::string out = t.str() + "\n";
  Table b({"identity", "n", "expected", "actual", "ok"});
  for (const auto& x : audit.bounds) b.add({x.name, std::to_string(x.n), x.expected, x.actual, yes(x.ok)});
  out += b.str();
  for (const auto& f : audit.findings) out += "finding: " + f + "\n";
  return out;
}

std::string to_table(const std::vector<ExtremalResult>& results) {
  Table t({"problem", "class", "n", "k", "value", "class_size", "argext", "family", "family_value", "in_range"});
  for (const auto& r : results)
    t.add({problem_name(r.problem), class_name(r.graph_class), std::to_string(r.n), std::to_string(r.k),
           r.found ? r.value.str() : "-", std::to_string(r.class_size), join(r.argext, " "), r.family,
           r.family_value ? r.family_value->str() : "-", yes(r.family_in_range)});
  return t.str();
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = csv_row("theorem", "branch", "n", "k", "strategy", "budget", "examined", "hypothesis_hits",
                            "conclusion_holds", "exceptional_matches", "violations", "exploratory");
  for (const auto& r : reports)
    out += csv_row(r.theorem, branch_name(r.branch), r.n, r.k, r.strategy, r.budget, r.examined, r.hypothesis_hits,
                   r.conclusion_holds, r.exceptional_matches.size(), join(r.violations, " "), yes(r.exploratory));
  return out;
}

std::string to_csv(const AuditReport& audit) {
  std::string out = csv_row("list", "item", "name", "n", "e", "wiener", "harary", "min_degree", "diameter", "property",
                            "certificate", "target", "target_wiener", "target_harary", "wiener_hypothesis",
                            "harary_hypothesis", "edge_equality");
  for (const auto& r : audit.rows)
    out += csv_row(r.list, r.item, r.name, r.n, r.e, r.wiener, r.harary.str(), r.min_degree, r.diameter,
                   yes(r.property), cert_kind_name(r.cert.kind), r.target, r.target_wiener, r.target_harary.str(),
                   yes(r.wiener_hypothesis), yes(r.harary_hypothesis), yes(r.edge_equality));
  return out;
}

std::string to_csv(const std::vector<ExtremalResult>& results) {
  std::string out =
      csv_row("problem", "class", "n", "k", "value", "class_size", "argext", "family", "family_value", "in_range");
  for (const auto& r : results)
    out += csv_row(problem_name(r.problem), class_name(r.graph_class), r.n, r.k, r.found ? r.value.str() : "",
                   r.class_size, join(r.argext, " "), r.family, r.family_value ? r.family_value->str() : "",
                   yes(r.family_in_range));
  return out;
}

}  // namespace hamindex
