#include "hamindex/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "hamindex/families.hpp"

namespace hamindex {
namespace {

int pair_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return u * n + v;
}

// Invariant used to pick the canonically-last edge; larger keys win.
int edge_key(const Graph& g, int u, int v) {
  int a = g.degree(u), b = g.degree(v);
  if (a > b) std::swap(a, b);
  const int common = (g.neighbors(u) & g.neighbors(v)).count();
  return (a << 12) | (b << 6) | common;
}

/// Canonical augmentation over sparse "base" graphs. A child G + e is kept iff
/// e lies in the Aut(G + e)-orbit of the canonically-last edge, and only one
/// non-edge per Aut(G)-orbit is tried, so every class appears exactly once.
class OrderlyGenerator {
 public:
  OrderlyGenerator(int n, int max_edges, int max_degree, EnumSplit split, GraphVisitor emit)
      : n_(n), max_edges_(max_edges), max_degree_(max_degree), split_(split), emit_(std::move(emit)) {
    split_depth_ = std::min(max_edges_, 4);
  }

  void run() {
    Graph root(n_);
    expand(root, 0);
  }

 private:
  void expand(const Graph& g, int m) {
    if (split_.count > 1 && m == split_depth_) {
      const long id = split_counter_++;
      if (id % split_.count != split_.index) return;
    }
    if (m >= split_depth_ || split_.index == 0 || split_.count == 1) emit_(g);
    if (m == max_edges_) return;

    const auto lab = canonical_labeling(g);
    std::vector<int> parent(static_cast<std::size_t>(n_ * n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : lab.automorphisms)
      for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
          if (g.has_edge(u, v)) continue;
          const int a = find(pair_index(u, v, n_)), b = find(pair_index(gamma[u], gamma[v], n_));
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    for (int u = 0; u < n_; ++u) {
      if (g.degree(u) >= max_degree_) continue;
      for (int v = u + 1; v < n_; ++v) {
        if (g.has_edge(u, v) || g.degree(v) >= max_degree_) continue;
        if (find(pair_index(u, v, n_)) != pair_index(u, v, n_)) continue;
        Graph child = g;
        child.add_edge(u, v);
        if (accept(child, u, v)) expand(child, m + 1);
      }
    }
  }

  bool accept(const Graph& g, int u, int v) const {
    const int mine = edge_key(g, u, v);
    int best = -1, ties = 0;
    for (auto [a, b] : g.edges()) {
      const int k = edge_key(g, a, b);
      if (k > mine) return false;
      if (k > best) {
        best = k;
        ties = 1;
      } else if (k == best) {
        ++ties;
      }
    }
    if (ties == 1) return true;

    const auto lab = canonical_labeling(g);
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) pos[lab.order[p]] = p;
    std::pair<int, int> last{-1, -1};
    int last_a = -1, last_b = -1;
    for (auto [a, b] : g.edges()) {
      if (edge_key(g, a, b) != mine) continue;
      const std::pair<int, int> rank{std::max(pos[a], pos[b]), std::min(pos[a], pos[b])};
      if (rank > last) {
        last = rank;
        last_a = a;
        last_b = b;
      }
    }
    const int target = pair_index(last_a, last_b, n_);
    const int start = pair_index(u, v, n_);
    if (target == start) return true;

    // Orbit of the new edge under the automorphism generators.
    std::vector<char> seen(static_cast<std::size_t>(n_ * n_), 0);
    std::vector<std::pair<int, int>> stack{{u, v}};
    seen[start] = 1;
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      for (const auto& gamma : lab.automorphisms) {
        const int idx = pair_index(gamma[a], gamma[b], n_);
        if (seen[idx]) continue;
        if (idx == target) return true;
        seen[idx] = 1;
        stack.emplace_back(gamma[a], gamma[b]);
      }
    }
    return false;
  }

  int n_;
  int max_edges_;
  int max_degree_;
  EnumSplit split_;
  GraphVisitor emit_;
  int split_depth_ = 0;
  long split_counter_ = 0;
};

void check_split(const EnumSplit& split) {
  if (split.count < 1 || split.index < 0 || split.index >= split.count)
    throw ParameterOutOfRange("invalid enumeration split");
}

std::vector<int> bipartite_colours(int half) {
  std::vector<int> c(static_cast<std::size_t>(2 * half), 0);
  for (int v = half; v < 2 * half; ++v) c[v] = 1;
  return c;
}

// Class key for a graph on X|Y where swapping the parts is allowed.
unsigned __int128 swap_invariant_code(const Graph& g, int half) {
  const auto straight = canonical_labeling(g, bipartite_colours(half));
  std::vector<int> flipped(static_cast<std::size_t>(2 * half), 1);
  for (int v = half; v < 2 * half; ++v) flipped[v] = 0;
  const auto swapped = canonical_labeling(g, flipped);
  return std::max(straight.code, swapped.code);
}

}  // namespace

bool has_balanced_bipartition(const Graph& g, int half) {
  if (g.order() != 2 * half) return false;
  std::vector<std::pair<int, int>> sizes;
  VertexSet rest = g.vertices();
  while (rest.any()) {
    const VertexSet comp = reach(g, rest.lowest(), rest);
    rest -= comp;
    Graph sub(comp.count());
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v : comp) index[v] = next++;
    for (int v : comp)
      for (int w : g.neighbors(v))
        if (v < w) sub.add_edge(index[v], index[w]);
    const auto col = two_coloring(sub);
    if (!col) return false;
    sizes.emplace_back(col->left.count(), col->right.count());
  }
  std::vector<char> reachable(static_cast<std::size_t>(g.order() + 1), 0);
  reachable[0] = 1;
  for (auto [a, b] : sizes) {
    std::vector<char> next(reachable.size(), 0);
    for (std::size_t s = 0; s < reachable.size(); ++s) {
      if (!reachable[s]) continue;
      if (s + a < next.size()) next[s + a] = 1;
      if (s + b < next.size()) next[s + b] = 1;
    }
    reachable = std::move(next);
  }
  return reachable[static_cast<std::size_t>(half)] != 0;
}

bool EnumFilter::accepts(const Graph& g) const {
  const int e = g.edge_count();
  if (e < min_edges) return false;
  if (max_edges >= 0 && e > max_edges) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < min_degree) return false;
  if (require_connected && !is_connected(g)) return false;
  if (bipartite_balanced && !has_balanced_bipartition(g, *bipartite_balanced)) return false;
  return true;
}

void enumerate_graphs(int n, const EnumFilter& filter, const GraphVisitor& visit, EnumSplit split) {
  if (n > kMaxFullEnumerationOrder)
    throw OrderTooLarge("full enumeration supports n <= " + std::to_string(kMaxFullEnumerationOrder));
  if (n < 0) throw ParameterOutOfRange("negative order");
  check_split(split);
  const int all = static_cast<int>(binom2(n));
  const int max_edges = filter.max_edges < 0 ? all : std::min(filter.max_edges, all);
  OrderlyGenerator gen(n, max_edges, n, split, [&](const Graph& g) {
    if (filter.accepts(g)) visit(g);
  });
  gen.run();
}

void enumerate_dense_via_complement(int n, int complement_edge_budget, const EnumFilter& filter,
                                    const GraphVisitor& visit, EnumSplit split) {
  if (n > kMaxCanonicalOrder)
    throw OrderTooLarge("complement enumeration supports n <= " + std::to_string(kMaxCanonicalOrder));
  if (n < 0 || complement_edge_budget < 0) throw ParameterOutOfRange("negative order or budget");
  check_split(split);
  const int all = static_cast<int>(binom2(n));
  const int budget = std::min(complement_edge_budget, all);
  // delta(G) >= k  <=>  Delta(complement) <= n - 1 - k, and degrees only grow along the tree.
  const int max_degree = std::max(0, n - 1 - filter.min_degree);
  OrderlyGenerator gen(n, budget, max_degree, split, [&](const Graph& sparse) {
    const Graph g = complement(sparse);
    if (filter.accepts(g)) visit(g);
  });
  gen.run();
}

void enumerate_balanced_bipartite(int half, int missing_edge_budget, int min_degree, const BipartiteVisitor& visit) {
  if (2 * half > kMaxCanonicalOrder)
    throw OrderTooLarge("balanced bipartite enumeration supports half <= " + std::to_string(kMaxCanonicalOrder / 2));
  if (half < 0 || missing_edge_budget < 0) throw ParameterOutOfRange("negative half-order or budget");
  const int budget = std::min(missing_edge_budget, half * half);
  const int max_missing_degree = half - min_degree;
  const Bipartition parts = b_family_parts(half);
  const Graph full = complete_bipartite(half, half).first;

  // Level-by-level generation of the missing-edge graph with swap-invariant dedup.
  std::map<unsigned __int128, Graph> level;
  level.emplace(swap_invariant_code(Graph(2 * half), half), Graph(2 * half));
  for (int m = 0;; ++m) {
    for (const auto& [code, missing] : level) {
      Graph g = full;
      for (auto [a, b] : missing.edges()) g.remove_edge(a, b);
      bool ok = true;
      for (int v = 0; v < g.order() && ok; ++v) ok = g.degree(v) >= min_degree;
      if (ok) visit(g, parts);
    }
    if (m == budget) break;
    std::map<unsigned __int128, Graph> next;
    for (const auto& [code, missing] : level) {
      for (int x = 0; x < half; ++x) {
        if (missing.degree(x) >= max_missing_degree) continue;
        for (int y = half; y < 2 * half; ++y) {
          if (missing.has_edge(x, y) || missing.degree(y) >= max_missing_degree) continue;
          Graph child = missing;
          child.add_edge(x, y);
          next.emplace(swap_invariant_code(child, half), std::move(child));
        }
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
}

Graph closure(const Graph& g, int closure_sum) {
  Graph c = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < c.order(); ++u)
      for (int v = u + 1; v < c.order(); ++v)
        if (!c.has_edge(u, v) && c.degree(u) + c.degree(v) >= closure_sum) {
          c.add_edge(u, v);
          changed = true;
        }
  }
  return c;
}

bool is_closed(const Graph& g, int closure_sum) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) >= closure_sum) return false;
  return true;
}

namespace {

// Complement F of a closed graph: a "core" H of vertices with degree >= hi,
// any graph on H, and low vertices whose neighbourhoods are subsets of H.
class ClosedGenerator {
 public:
  ClosedGenerator(int n, int budget, int closure_sum, const EnumFilter& filter, const GraphVisitor& visit)
      : n_(n), budget_(budget), filter_(filter), visit_(visit) {
    need_ = 2 * n - 1 - closure_sum;  // minimum degree sum of a complement edge
    hi_ = std::max(1, (need_ + 1) / 2);
    max_deg_ = n - 1 - filter.min_degree;
  }

  ClosedEnumStats run() {
    for (int h = 0; h <= n_; ++h) {
      const long cap = std::min<long>(2L * budget_, static_cast<long>(binom2(h)) + budget_);
      if (static_cast<long>(h) * hi_ > cap) continue;
      if (h > kMaxFullEnumerationOrder)
        throw InfeasibleScope("closed-graph core of " + std::to_string(h) + " vertices is too large");
      if (h == 0) {
        emit_core(Graph(0));
        continue;
      }
      enumerate_graphs(h, {}, [&](const Graph& core) {
        if (core.edge_count() <= budget_) emit_core(core);
      });
    }
    return stats_;
  }

 private:
  void emit_core(const Graph& core) {
    core_ = core;
    h_ = core.order();
    types_.clear();
    for (int mask = 1; mask < (1 << h_); ++mask) {
      const int size = std::popcount(static_cast<unsigned>(mask));
      if (size < hi_ && size <= max_deg_) types_.push_back(mask);
    }
    deg_.assign(static_cast<std::size_t>(h_), 0);
    for (int v = 0; v < h_; ++v) deg_[v] = core.degree(v);
    chosen_.clear();
    place(0, n_ - h_, budget_ - core.edge_count());
  }

  int deficit() const {
    int d = 0;
    for (int v = 0; v < h_; ++v) d += std::max(0, hi_ - deg_[v]);
    return d;
  }

  void place(std::size_t type, int slots, int edges_left) {
    if (deficit() > edges_left) return;
    if (type == types_.size()) {
      leaf();
      return;
    }
    place(type + 1, slots, edges_left);
    const int mask = types_[type];
    const int size = std::popcount(static_cast<unsigned>(mask));
    int added = 0;
    while (slots > added && edges_left >= size * (added + 1)) {
      bool ok = true;
      for (int v = 0; v < h_; ++v)
        if ((mask >> v) & 1) ok = ok && deg_[v] + 1 <= max_deg_;
      if (!ok) break;
      ++added;
      for (int v = 0; v < h_; ++v)
        if ((mask >> v) & 1) ++deg_[v];
      chosen_.push_back(mask);
      place(type + 1, slots - added, edges_left - size * added);
    }
    for (int i = 0; i < added; ++i) {
      chosen_.pop_back();
      for (int v = 0; v < h_; ++v)
        if ((mask >> v) & 1) --deg_[v];
    }
  }

  void leaf() {
    for (int v = 0; v < h_; ++v)
      if (deg_[v] < hi_) return;
    for (int mask : chosen_) {
      const int size = std::popcount(static_cast<unsigned>(mask));
      for (int v = 0; v < h_; ++v)
        if (((mask >> v) & 1) && size + deg_[v] < need_) return;
    }
    Graph f(n_);
    for (auto [a, b] : core_.edges()) f.add_edge(a, b);
    int next = h_;
    for (int mask : chosen_) {
      for (int v = 0; v < h_; ++v)
        if ((mask >> v) & 1) f.add_edge(v, next);
      ++next;
    }
    const Graph g = complement(f);
    if (!filter_.accepts(g)) return;

    const VertexSet touched = [&] {
      VertexSet t;
      for (int v = 0; v < n_; ++v)
        if (f.degree(v) > 0) t.set(v);
      return t;
    }();
    if (touched.count() <= kMaxCanonicalOrder) {
      Graph sub(touched.count());
      std::vector<int> index(static_cast<std::size_t>(n_), -1);
      int i = 0;
      for (int v : touched) index[v] = i++;
      for (auto [a, b] : f.edges()) sub.add_edge(index[a], index[b]);
      if (!seen_.insert(canonical_form(sub)).second) return;
    } else {
      ++stats_.undeduplicated;
    }
    ++stats_.emitted;
    visit_(g);
  }

  int n_;
  int budget_;
  const EnumFilter& filter_;
  const GraphVisitor& visit_;
  int need_ = 0, hi_ = 1, max_deg_ = 0;
  Graph core_;
  int h_ = 0;
  std::vector<int> types_;
  std::vector<int> deg_;
  std::vector<int> chosen_;
  std::set<CanonicalForm> seen_;
  ClosedEnumStats stats_;
};

}  // namespace

ClosedEnumStats enumerate_closed_dense(int n, int complement_edge_budget, int closure_sum, const EnumFilter& filter,
                                       const GraphVisitor& visit) {
  if (n < 0 || complement_edge_budget < 0) throw ParameterOutOfRange("negative order or budget");
  if (n > VertexSet::kBits) throw CapacityError("order above " + std::to_string(VertexSet::kBits));
  ClosedGenerator gen(n, std::min<int>(complement_edge_budget, static_cast<int>(binom2(n))), closure_sum, filter,
                      visit);
  return gen.run();
}

double estimated_class_count(int n, int max_edges) {
  const double pairs = static_cast<double>(binom2(n));
  const double log_fact = std::lgamma(n + 1.0);
  double total = 0;
  for (int m = 0; m <= max_edges && m <= pairs; ++m) {
    const double log_labeled = std::lgamma(pairs + 1) - std::lgamma(m + 1.0) - std::lgamma(pairs - m + 1);
    total += std::max(1.0, std::exp(log_labeled - log_fact));
  }
  return total;
}

}  // namespace hamindex
