#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamindex/graph.hpp"

namespace hamindex {

enum class HamMode { Cycle, Path };

enum class CertKind { Cycle, Path, CutWitness, Exhausted };

std::string cert_kind_name(CertKind kind);

/// Evidence for a Hamiltonicity or traceability verdict.
///
/// A cut witness S certifies a negative answer: G - S has more than
/// max(|S|, 1) components (cycle mode) or more than |S| + 1 components (path
/// mode). `Exhausted` is only issued after a complete backtracking search.
struct HamCertificate {
  CertKind kind = CertKind::Exhausted;
  std::vector<int> sequence;
  VertexSet cut_set;
  int component_count = 0;
};

struct HamResult {
  bool answer = false;
  HamCertificate cert;
};

struct SolverOptions {
  std::uint64_t node_budget = 0;  // 0 selects default_node_budget()
  int cut_witness_limit = 6;
};

/// 10^8, or the value of HAMINDEX_BUDGET when set.
std::uint64_t default_node_budget();

/// Exact decision. Throws BudgetExhausted rather than guessing when the search
/// exceeds the node budget.
HamResult is_hamiltonian(const Graph& g, const SolverOptions& opts = {});
HamResult is_traceable(const Graph& g, const SolverOptions& opts = {});
HamResult solve(const Graph& g, HamMode mode, const SolverOptions& opts = {});

/// Component count above which G - S certifies a negative answer.
int cut_bound(HamMode mode, int cut_size);

/// Searches structured candidates (empty set, universal vertices,
/// neighbourhoods, the smaller colour class) and then every S with
/// |S| <= max_size. A missing witness proves nothing.
std::optional<VertexSet> find_cut_witness(const Graph& g, HamMode mode, int max_size = 6);
/// Only the structured candidates of find_cut_witness.
std::optional<VertexSet> find_structured_cut_witness(const Graph& g, HamMode mode);

/// Re-checks a certificate against the graph; throws std::logic_error when it
/// does not hold.
void validate_certificate(const Graph& g, HamMode mode, const HamResult& result);

}  // namespace hamindex
