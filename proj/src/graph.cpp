#include "hamindex/graph.hpp"

#include <algorithm>
#include <numeric>

namespace hamindex {
namespace {

void check_capacity(long n) {
  if (n < 0) throw ParameterOutOfRange("negative vertex count");
  if (n > Graph::kCapacity)
    throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(Graph::kCapacity));
}

}  // namespace

Graph::Graph(int n) {
  check_capacity(n);
  adj_.resize(static_cast<std::size_t>(n));
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw ParameterOutOfRange("loops are not allowed");
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw ParameterOutOfRange("edge endpoint out of range");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw ParameterOutOfRange("edge endpoint out of range");
  adj_[u].reset(v);
  adj_[v].reset(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (v > u) out.emplace_back(u, v);
  return out;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty(int n) { return Graph(n); }

std::pair<Graph, Bipartition> complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw ParameterOutOfRange("negative part size");
  check_capacity(static_cast<long>(a) + b);
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  Bipartition parts{VertexSet::range(a), VertexSet::range(a + b) - VertexSet::range(a)};
  return {std::move(g), parts};
}

Graph cycle(int n) {
  if (n < 3) throw ParameterOutOfRange("a cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  check_capacity(static_cast<long>(a) + h.order());
  Graph out(a + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(a + u, a + v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const int a = g.order();
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, a + v);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw ParameterOutOfRange("vertex out of range");
  Graph out(g.order() - 1);
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (auto [a, b] : g.edges())
    if (a != v && b != v) out.add_edge(shift(a), shift(b));
  return out;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw ParameterOutOfRange("permutation size does not match graph order");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  out.set_label(g.label());
  return out;
}

VertexSet reach(const Graph& g, int start, const VertexSet& allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next;
    for (int u : frontier) next |= g.neighbors(u);
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reach(g, 0, g.vertices()).count() == g.order();
}

int components_without(const Graph& g, const VertexSet& removed) {
  VertexSet rest = g.vertices() - removed;
  int count = 0;
  while (rest.any()) {
    rest -= reach(g, rest.lowest(), rest);
    ++count;
  }
  return count;
}

std::optional<Bipartition> two_coloring(const Graph& g) {
  Bipartition parts;
  VertexSet unseen = g.vertices();
  while (unseen.any()) {
    const int root = unseen.lowest();
    VertexSet frontier = VertexSet::single(root);
    bool left = true;
    unseen.reset(root);
    while (frontier.any()) {
      (left ? parts.left : parts.right) |= frontier;
      VertexSet next;
      for (int u : frontier) next |= g.neighbors(u);
      const VertexSet& same = left ? parts.left : parts.right;
      if (next.intersects(same)) return std::nullopt;
      next &= unseen;
      unseen -= next;
      frontier = next;
      left = !left;
    }
  }
  return parts;
}

GraphStats basic_stats(const Graph& g) {
  GraphStats s;
  s.n = g.order();
  s.e = g.edge_count();
  if (s.n > 0) {
    s.min_degree = Graph::kCapacity;
    for (int v = 0; v < s.n; ++v) {
      s.min_degree = std::min(s.min_degree, g.degree(v));
      s.max_degree = std::max(s.max_degree, g.degree(v));
    }
  }
  s.connected = is_connected(g);
  s.bipartition = two_coloring(g);
  return s;
}

}  // namespace hamindex
