#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "hamindex/canon.hpp"
#include "hamindex/graph.hpp"

namespace hamindex {

/// Hypothesis filter applied to every enumerated graph.
struct EnumFilter {
  int min_degree = 0;
  int min_edges = 0;
  int max_edges = -1;  // -1 means C(n,2)
  bool require_connected = false;
  std::optional<int> bipartite_balanced;  // half-order of a required balanced 2-colouring

  bool accepts(const Graph& g) const;
};

/// Selects one of `count` disjoint slices of an enumeration; the slices
/// together cover the stream exactly once.
struct EnumSplit {
  int index = 0;
  int count = 1;
};

using GraphVisitor = std::function<void(const Graph&)>;
using BipartiteVisitor = std::function<void(const Graph&, const Bipartition&)>;

/// Largest order accepted by enumerate_graphs.
constexpr int kMaxFullEnumerationOrder = 10;

/// One representative per isomorphism class of order-n graphs passing the
/// filter, in a deterministic order. Throws OrderTooLarge for n > 10.
void enumerate_graphs(int n, const EnumFilter& filter, const GraphVisitor& visit, EnumSplit split = {});

/// One representative per isomorphism class of order-n graphs whose
/// complement has at most `complement_edge_budget` edges, filtered after
/// complementing. Throws OrderTooLarge beyond the canonical-labeling limit.
void enumerate_dense_via_complement(int n, int complement_edge_budget, const EnumFilter& filter,
                                    const GraphVisitor& visit, EnumSplit split = {});

/// Subgraphs of K_{half,half} missing at most `missing_edge_budget` edges
/// with minimum degree >= min_degree, one per class where swapping the two
/// parts counts as an isomorphism. Parts are X = [0, half), Y = [half, 2 half).
void enumerate_balanced_bipartite(int half, int missing_edge_budget, int min_degree, const BipartiteVisitor& visit);

/// Counters from enumerate_closed_dense.
struct ClosedEnumStats {
  std::int64_t emitted = 0;
  /// Graphs emitted without deduplication because their complement has more
  /// than kMaxCanonicalOrder non-isolated vertices.
  std::int64_t undeduplicated = 0;
};

/// Graphs of order n that equal their own `closure_sum`-closure (every
/// non-adjacent pair has degree sum < closure_sum) and whose complement has
/// at most `complement_edge_budget` edges, filtered after complementing.
/// In the complement every edge then has an endpoint of degree at least
/// ceil((2n - 1 - closure_sum) / 2), which keeps the search small even for
/// orders where enumerate_dense_via_complement is hopeless. Throws
/// InfeasibleScope when the high-degree core would exceed
/// kMaxFullEnumerationOrder vertices.
ClosedEnumStats enumerate_closed_dense(int n, int complement_edge_budget, int closure_sum, const EnumFilter& filter,
                                       const GraphVisitor& visit);

/// Adds every edge uv with deg(u) + deg(v) >= closure_sum until none is left.
Graph closure(const Graph& g, int closure_sum);
bool is_closed(const Graph& g, int closure_sum);

/// Rough class count for graphs of order n with at most max_edges edges
/// (sum over m of max(1, C(C(n,2), m) / n!)). Used to refuse runs that would
/// not finish.
double estimated_class_count(int n, int max_edges);

/// Whether g admits a proper 2-colouring with both classes of size `half`.
bool has_balanced_bipartition(const Graph& g, int half);

}  // namespace hamindex
