#include "hamindex/hamilton.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace hamindex {
namespace {

constexpr std::uint64_t kDefaultBudget = 100'000'000;

class Backtracker {
 public:
  Backtracker(const Graph& g, HamMode mode, std::uint64_t budget)
      : g_(g), mode_(mode), n_(g.order()), budget_(budget) {}

  std::optional<std::vector<int>> run() {
    std::vector<int> starts;
    if (mode_ == HamMode::Cycle) {
      starts.push_back(lowest_degree_vertex(g_.vertices()));
    } else {
      // A pendant vertex must be an end of any Hamilton path.
      for (int v = 0; v < n_; ++v)
        if (g_.degree(v) == 1) {
          starts.push_back(v);
          break;
        }
      if (starts.empty()) {
        for (int v = 0; v < n_; ++v) starts.push_back(v);
        std::stable_sort(starts.begin(), starts.end(),
                         [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
      }
    }
    for (int s : starts) {
      start_ = s;
      seq_.assign(1, s);
      unvisited_ = g_.vertices();
      unvisited_.reset(s);
      if (extend(s)) return seq_;
    }
    return std::nullopt;
  }

 private:
  int lowest_degree_vertex(const VertexSet& among) const {
    int best = -1;
    for (int v : among)
      if (best < 0 || g_.degree(v) < g_.degree(best)) best = v;
    return best;
  }

  bool extend(int end) {
    if (unvisited_.empty()) return mode_ == HamMode::Path || g_.has_edge(end, start_);
    if (++nodes_ > budget_)
      throw BudgetExhausted("Hamiltonicity search exceeded node budget of " + std::to_string(budget_));

    VertexSet ends = VertexSet::single(end);
    if (mode_ == HamMode::Cycle) ends.set(start_);
    const VertexSet usable = unvisited_ | ends;

    std::array<int, Graph::kCapacity> order{};
    std::array<int, Graph::kCapacity> key{};
    int count = 0;
    for (int w : g_.neighbors(end) & unvisited_) {
      const int d = (g_.neighbors(w) & usable).count();
      int pos = count++;
      while (pos > 0 && key[pos - 1] > d) {
        order[pos] = order[pos - 1];
        key[pos] = key[pos - 1];
        --pos;
      }
      order[pos] = w;
      key[pos] = d;
    }

    for (int i = 0; i < count; ++i) {
      const int w = order[i];
      unvisited_.reset(w);
      seq_.push_back(w);
      if (feasible(w) && extend(w)) return true;
      seq_.pop_back();
      unvisited_.set(w);
    }
    return false;
  }

  // Necessary conditions for completing the walk from `end` through every
  // unvisited vertex (and back to the start in cycle mode).
  bool feasible(int end) const {
    const VertexSet& rest = unvisited_;
    if (rest.empty()) return true;
    VertexSet with_end = rest;
    with_end.set(end);
    if (reach(g_, end, with_end) != with_end) return false;

    if (mode_ == HamMode::Cycle) {
      if (!g_.neighbors(start_).intersects(rest)) return false;
      VertexSet usable = with_end;
      usable.set(start_);
      for (int x : rest)
        if ((g_.neighbors(x) & usable).count() < 2) return false;
    } else {
      int dead_ends = 0;
      for (int x : rest)
        if ((g_.neighbors(x) & with_end).count() < 2 && ++dead_ends > 1) return false;
    }
    return true;
  }

  const Graph& g_;
  HamMode mode_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int start_ = 0;
  VertexSet unvisited_;
  std::vector<int> seq_;
};

bool violates(const Graph& g, HamMode mode, const VertexSet& s) {
  return components_without(g, s) > cut_bound(mode, s.count());
}

HamResult negative(const Graph& g, const VertexSet& cut) {
  HamResult r;
  r.cert.kind = CertKind::CutWitness;
  r.cert.cut_set = cut;
  r.cert.component_count = components_without(g, cut);
  return r;
}

// Visits every k-subset of `pool` in lexicographic order until `f` returns true.
template <class F>
bool for_each_subset(const std::vector<int>& pool, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int m = static_cast<int>(pool.size());
  if (k > m) return false;
  while (true) {
    VertexSet s;
    for (int i : idx) s.set(pool[i]);
    if (f(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::string cert_kind_name(CertKind kind) {
  switch (kind) {
    case CertKind::Cycle: return "cycle";
    case CertKind::Path: return "path";
    case CertKind::CutWitness: return "cut_witness";
    case CertKind::Exhausted: return "exhausted";
  }
  return "?";
}

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("HAMINDEX_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

int cut_bound(HamMode mode, int cut_size) {
  return mode == HamMode::Cycle ? std::max(cut_size, 1) : cut_size + 1;
}

std::optional<VertexSet> find_structured_cut_witness(const Graph& g, HamMode mode) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  if (violates(g, mode, VertexSet{})) return VertexSet{};

  VertexSet universal;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) universal.set(v);
  if (universal.any() && universal.count() < n && violates(g, mode, universal)) return universal;

  std::vector<int> by_degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  for (int v : by_degree)
    if (violates(g, mode, g.neighbors(v))) return g.neighbors(v);

  if (auto parts = two_coloring(g)) {
    const VertexSet& smaller = parts->left.count() <= parts->right.count() ? parts->left : parts->right;
    if (smaller.any() && violates(g, mode, smaller)) return smaller;
  }
  return std::nullopt;
}

std::optional<VertexSet> find_cut_witness(const Graph& g, HamMode mode, int max_size) {
  if (auto s = find_structured_cut_witness(g, mode)) return s;
  std::vector<int> pool(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) pool[v] = v;
  std::optional<VertexSet> found;
  for (int k = 1; k <= std::min(max_size, g.order() - 1) && !found; ++k) {
    for_each_subset(pool, k, [&](const VertexSet& s) {
      if (violates(g, mode, s)) found = s;
      return found.has_value();
    });
  }
  return found;
}

HamResult solve(const Graph& g, HamMode mode, const SolverOptions& opts) {
  const int n = g.order();
  const std::uint64_t budget = opts.node_budget ? opts.node_budget : default_node_budget();
  HamResult result;

  const bool trivial_no = mode == HamMode::Cycle ? n < 3 : n == 0;
  if (trivial_no) {
    result.cert.kind = CertKind::Exhausted;
  } else if (auto cut = find_structured_cut_witness(g, mode)) {
    result = negative(g, *cut);
  } else if (auto seq = Backtracker(g, mode, budget).run()) {
    result.answer = true;
    result.cert.kind = mode == HamMode::Cycle ? CertKind::Cycle : CertKind::Path;
    result.cert.sequence = std::move(*seq);
  } else if (auto cut = find_cut_witness(g, mode, opts.cut_witness_limit)) {
    result = negative(g, *cut);
  } else {
    result.cert.kind = CertKind::Exhausted;
  }
  validate_certificate(g, mode, result);
  return result;
}

HamResult is_hamiltonian(const Graph& g, const SolverOptions& opts) { return solve(g, HamMode::Cycle, opts); }
HamResult is_traceable(const Graph& g, const SolverOptions& opts) { return solve(g, HamMode::Path, opts); }

void validate_certificate(const Graph& g, HamMode mode, const HamResult& r) {
  const int n = g.order();
  auto fail = [](const std::string& why) { throw std::logic_error("invalid certificate: " + why); };
  switch (r.cert.kind) {
    case CertKind::Cycle:
    case CertKind::Path: {
      if (!r.answer) fail("positive certificate on a negative answer");
      const bool cyc = r.cert.kind == CertKind::Cycle;
      if (cyc != (mode == HamMode::Cycle)) fail("certificate kind does not match mode");
      const auto& seq = r.cert.sequence;
      if (static_cast<int>(seq.size()) != n) fail("sequence is not a permutation");
      VertexSet seen;
      for (int v : seq) {
        if (v < 0 || v >= n || seen.test(v)) fail("sequence is not a permutation");
        seen.set(v);
      }
      for (int i = 0; i + 1 < n; ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) fail("consecutive vertices are not adjacent");
      if (cyc && !g.has_edge(seq.back(), seq.front())) fail("cycle does not close");
      break;
    }
    case CertKind::CutWitness:
      if (r.answer) fail("cut witness on a positive answer");
      if (components_without(g, r.cert.cut_set) != r.cert.component_count) fail("component count mismatch");
      if (r.cert.component_count <= cut_bound(mode, r.cert.cut_set.count())) fail("cut set does not violate bound");
      break;
    case CertKind::Exhausted:
      if (r.answer) fail("exhausted marker on a positive answer");
      break;
  }
}

}  // namespace hamindex
