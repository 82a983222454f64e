#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamindex/errors.hpp"
#include "hamindex/vertex_set.hpp"

namespace hamindex {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Rows are kept symmetric and loop-free by every mutator, so e(G) is always
/// half the degree sum.
class Graph {
 public:
  static constexpr int kCapacity = VertexSet::kBits;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::vector<std::pair<int, int>> edges() const;

  /// Adjacency equality on identical vertex labels; the text label is ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::string label_;
};

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

struct GraphStats {
  int n = 0;
  int e = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool connected = true;
  std::optional<Bipartition> bipartition;
};

Graph complete(int n);
Graph empty(int n);
std::pair<Graph, Bipartition> complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph petersen();

/// G + H: vertices of H are shifted by |G|.
Graph disjoint_union(const Graph& g, const Graph& h);
/// G v H: the union plus every edge between the two vertex sets.
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
/// Removes v; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, int v);
/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, const std::vector<int>& perm);

GraphStats basic_stats(const Graph& g);

bool is_connected(const Graph& g);
/// Vertex set of the component of `start` inside the subgraph induced by `allowed`.
VertexSet reach(const Graph& g, int start, const VertexSet& allowed);
/// Number of connected components of G - removed.
int components_without(const Graph& g, const VertexSet& removed);
std::optional<Bipartition> two_coloring(const Graph& g);

}  // namespace hamindex
