// hamindex: distance indices, extremal families and Hamiltonicity checks.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hamindex/families.hpp"
#include "hamindex/graph_io.hpp"
#include "hamindex/hamilton.hpp"
#include "hamindex/metrics.hpp"
#include "hamindex/verify.hpp"

using namespace hamindex;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolations = 2;

struct Range {
  int lo = 0;
  int hi = -1;
  bool set() const { return hi >= lo; }
};

Range parse_range(const std::string& text) {
  Range r;
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(text);
      const std::string tail = text.substr(dots + 2);
      r.hi = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw ParseError("bad range '" + text + "' (expected A or A..B)");
  }
  if (r.hi < r.lo) throw ParseError("empty range '" + text + "'");
  return r;
}

struct Global {
  std::string format = "json";
  int jobs = 1;
  std::string out;
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw ParseError("cannot write " + g.out);
  f << text;
}

struct NamedGraph {
  std::string source;
  Graph graph;
};

std::vector<NamedGraph> load(const std::vector<std::string>& files) {
  std::vector<NamedGraph> out;
  for (const auto& path : files) {
    if (path == "-") {
      std::string line;
      int no = 0;
      while (std::getline(std::cin, line)) {
        ++no;
        if (line.empty()) continue;
        try {
          out.push_back({"<stdin>:" + std::to_string(no), from_graph6(line)});
        } catch (const Error& e) {
          throw ParseError("<stdin>:" + std::to_string(no) + ": " + e.what());
        }
      }
      continue;
    }
    const auto graphs = read_graph_file(path);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      out.push_back({graphs.size() == 1 ? path : path + ":" + std::to_string(i + 1), graphs[i]});
  }
  return out;
}

// ---- rows --------------------------------------------------------------

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Rows of string cells rendered as json (array of objects), csv or table.
struct Rows {
  std::vector<std::string> columns;
  std::vector<Json> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      Json out = {{"schema", kReportSchema}, {"rows", rows}};
      return out.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
      std::vector<std::string> line;
      for (const auto& c : columns) {
        const Json& v = r.contains(c) ? r.at(c) : Json(nullptr);
        line.push_back(v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump());
      }
      cells.push_back(std::move(line));
    }
    std::ostringstream os;
    if (format == "csv") {
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
      os << '\n';
      for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_escape(line[i]);
        os << '\n';
      }
      return os.str();
    }
    std::vector<std::size_t> w;
    for (const auto& c : columns) w.push_back(c.size());
    for (const auto& line : cells)
      for (std::size_t i = 0; i < line.size(); ++i) w[i] = std::max(w[i], line[i].size());
    auto put = [&](const std::vector<std::string>& line) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        os << line[i];
        if (i + 1 < line.size()) os << std::string(w[i] - line[i].size() + 2, ' ');
      }
      os << '\n';
    };
    put(columns);
    for (const auto& line : cells) put(line);
    return os.str();
  }
};

Json index_row(const NamedGraph& ng) {
  const Graph& g = ng.graph;
  const auto st = basic_stats(g);
  Json row = {{"source", ng.source}, {"n", st.n}, {"e", st.e}, {"min_degree", st.min_degree}};
  if (st.n > 0 && st.connected) {
    const auto idx = distance_indices(g);
    row["diameter"] = idx.diameter;
    row["W"] = idx.wiener;
    row["H"] = idx.harary.str();
    row["note"] = "";
  } else {
    row["diameter"] = "undefined";
    row["W"] = "undefined";
    row["H"] = "undefined";
    row["note"] = st.n == 0 ? "empty graph" : "disconnected";
  }
  return row;
}

Json cert_json(const HamResult& r) {
  Json j = {{"kind", cert_kind_name(r.cert.kind)}};
  if (!r.cert.sequence.empty()) j["sequence"] = r.cert.sequence;
  if (r.cert.kind == CertKind::CutWitness) {
    std::vector<int> cut;
    for (int v : r.cert.cut_set) cut.push_back(v);
    j["cut_set"] = cut;
    j["components"] = r.cert.component_count;
  }
  return j;
}

std::string cert_text(const Json& c) {
  std::string s = c.at("kind").get<std::string>();
  if (c.contains("sequence")) s += " " + c.at("sequence").dump();
  if (c.contains("cut_set")) s += " S=" + c.at("cut_set").dump() + " components=" + c.at("components").dump();
  return s;
}

// ---- subcommands -------------------------------------------------------

int cmd_index(const Global& g, const std::vector<std::string>& files) {
  Rows rows{{"source", "n", "e", "min_degree", "diameter", "W", "H", "note"}, {}};
  for (const auto& ng : load(files)) rows.rows.push_back(index_row(ng));
  emit(g, rows.render(g.format));
  return kExitOk;
}

int cmd_gen(const Global& g, const std::string& text, bool graph6_only) {
  const FamilySpec spec = FamilySpec::parse(text);
  const Graph graph = build(spec);
  if (graph6_only) {
    emit(g, to_graph6(graph) + "\n");
    return kExitOk;
  }
  Json row = index_row({spec.str(), graph});
  row["spec"] = spec.str();
  row["graph6"] = to_graph6(graph);
  Rows rows{{"spec", "graph6", "n", "e", "min_degree", "diameter", "W", "H"}, {row}};
  emit(g, rows.render(g.format));
  return kExitOk;
}

int cmd_check(const Global& g, const std::vector<std::string>& files, std::uint64_t budget) {
  SolverOptions opts;
  opts.node_budget = budget;
  Rows rows{{"source", "n", "hamiltonian", "cycle_certificate", "traceable", "path_certificate"}, {}};
  for (const auto& ng : load(files)) {
    Json row = {{"source", ng.source}, {"n", ng.graph.order()}};
    for (HamMode mode : {HamMode::Cycle, HamMode::Path}) {
      const bool cyc = mode == HamMode::Cycle;
      try {
        const auto r = solve(ng.graph, mode, opts);
        validate_certificate(ng.graph, mode, r);
        row[cyc ? "hamiltonian" : "traceable"] = r.answer;
        const Json c = cert_json(r);
        row[cyc ? "cycle_certificate" : "path_certificate"] = g.format == "json" ? c : Json(cert_text(c));
      } catch (const BudgetExhausted& e) {
        row[cyc ? "hamiltonian" : "traceable"] = "unknown";
        row[cyc ? "cycle_certificate" : "path_certificate"] = std::string("budget exhausted: ") + e.what();
      }
    }
    rows.rows.push_back(row);
  }
  emit(g, rows.render(g.format));
  return kExitOk;
}

std::string render_reports(const Global& g, const std::vector<VerificationReport>& reports) {
  if (g.format == "csv") return to_csv(reports);
  if (g.format == "table") return to_table(reports);
  return to_json(reports);
}

int cmd_verify(const Global& g, const std::string& theorem, const std::string& n_text, const std::string& k_text,
               bool exploratory, const std::string& strategy, const std::string& checkpoint, std::uint64_t budget) {
  const TheoremId id = parse_theorem_id(theorem);
  const Range n = parse_range(n_text);
  Range k;
  if (!k_text.empty())
    k = parse_range(k_text);
  else
    k.lo = k.hi = fixed_k(id) >= 0 ? fixed_k(id) : 1;

  VerifyOptions opts;
  opts.exploratory = exploratory;
  opts.strategy = parse_strategy(strategy);
  opts.jobs = g.jobs;
  opts.checkpoint_dir = checkpoint;
  opts.solver.node_budget = budget;

  std::vector<VerificationReport> reports;
  bool failed = false;
  bool errors = false;
  const bool fact = id == TheoremId::Fact31 || id == TheoremId::Fact51;
  for (int nn = n.lo; nn <= n.hi; ++nn)
    for (int kk = k.lo; kk <= (fact ? k.lo : k.hi); ++kk) {
      try {
        for (auto& r : verify(id, nn, kk, opts)) {
          if (!r.violations.empty() && in_stated_range(id, nn, kk)) failed = true;
          if (!r.bookkeeping_ok()) failed = true;
          reports.push_back(std::move(r));
        }
      } catch (const Error& e) {
        // Keep going so one infeasible order does not discard the others.
        std::cerr << "hamindex: n=" << nn << " k=" << kk << ": " << e.what() << "\n";
        errors = true;
      }
    }
  emit(g, render_reports(g, reports));
  if (failed) return kExitViolations;
  return errors ? kExitError : kExitOk;
}

int cmd_search(const Global& g, const std::string& problem_text, const std::string& n_text, const std::string& k_text,
               const std::string& class_text) {
  const ExtremalProblem problem = parse_problem(problem_text);
  const bool bip = problem == ExtremalProblem::BipartiteMinWiener || problem == ExtremalProblem::BipartiteMaxHarary;
  const ExtremalClass cls = !class_text.empty() ? parse_class(class_text)
                            : bip                ? ExtremalClass::BipartiteNonHamiltonian
                                                 : ExtremalClass::NonHamiltonian;
  const Range n = parse_range(n_text);
  const Range k = parse_range(k_text);
  VerifyOptions opts;
  opts.jobs = g.jobs;
  std::vector<ExtremalResult> results;
  for (int nn = n.lo; nn <= n.hi; ++nn)
    for (int kk = k.lo; kk <= k.hi; ++kk) results.push_back(extremal_search(problem, cls, nn, kk, opts));
  if (g.format == "csv")
    emit(g, to_csv(results));
  else if (g.format == "table")
    emit(g, to_table(results));
  else
    emit(g, to_json(results));
  return kExitOk;
}

int cmd_audit(const Global& g, int max_order) {
  const auto a = audit_exceptional_sets(max_order);
  if (g.format == "csv")
    emit(g, to_csv(a));
  else if (g.format == "table")
    emit(g, to_table(a));
  else
    emit(g, to_json(a));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiener and Harary indices, extremal families and Hamiltonicity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--jobs,-j", g.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--out,-o", g.out, "Write output to this file instead of stdout");

  std::vector<std::string> files;
  std::uint64_t budget = 0;
  bool graph6_only = false;
  std::string spec, theorem, n_text, k_text, strategy = "auto", checkpoint, problem, cls;
  bool exploratory = false;
  int max_order = 12;

  auto* index = app.add_subcommand("index", "Order, size, degree, diameter, W and H of each graph");
  index->add_option("files", files, "graph6 or edge-list files ('-' reads graph6 from stdin)")->required();

  auto* gen = app.add_subcommand("gen", "Build a family member, e.g. N:n=9,k=2 or G1:n=7,i=1");
  gen->add_option("spec", spec, "Family spec")->required();
  gen->add_flag("--graph6", graph6_only, "Print only the graph6 line");

  auto* check = app.add_subcommand("check", "Hamiltonicity and traceability with certificates");
  check->add_option("files", files, "graph6 or edge-list files ('-' reads graph6 from stdin)")->required();
  check->add_option("--budget", budget, "Search node budget (default 1e8 or HAMINDEX_BUDGET)")
      ->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Check a claim over every graph in scope");
  ver->add_option("theorem", theorem, "Claim id, e.g. Lem2.3, Thm4.3, Thm5.1bip")->required();
  ver->add_option("--n", n_text, "Order range A..B (half-order for bipartite claims)")->required();
  ver->add_option("--k", k_text, "Degree range C..D");
  ver->add_flag("--exploratory", exploratory, "Allow orders outside the stated range");
  ver->add_option("--strategy", strategy, "auto, full, complement, closure or bipartite")->capture_default_str();
  ver->add_option("--checkpoint", checkpoint, "Directory for per-split checkpoints");
  ver->add_option("--budget", budget, "Search node budget per graph")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "Exact min W / max H over a non-Hamiltonian class");
  search->add_option("problem", problem, "1.1-minW, 1.1-maxH, 1.2-minW or 1.2-maxH")->required();
  search->add_option("--n", n_text, "Order (half-order for 1.2) or range")->required();
  search->add_option("--k", k_text, "Minimum degree or range")->required();
  search->add_option("--class", cls, "nonHamiltonian, nonTraceable or bipartiteNonHamiltonian");

  auto* audit = app.add_subcommand("audit", "Audit the exceptional lists and the closed-form bounds");
  audit->add_option("--max-order", max_order, "Largest order for the parametric members")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*index) return cmd_index(g, files);
    if (*gen) return cmd_gen(g, spec, graph6_only);
    if (*check) return cmd_check(g, files, budget);
    if (*ver) return cmd_verify(g, theorem, n_text, k_text, exploratory, strategy, checkpoint, budget);
    if (*search) return cmd_search(g, problem, n_text, k_text, cls);
    if (*audit) return cmd_audit(g, max_order);
  } catch (const std::exception& e) {
    std::cerr << "hamindex: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
