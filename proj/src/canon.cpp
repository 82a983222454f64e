#include "hamindex/canon.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace hamindex {
namespace {

using Mask = std::uint32_t;
using Code = unsigned __int128;

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

class Canonizer {
 public:
  Canonizer(const Graph& g, const std::vector<int>& colours) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      Mask row = 0;
      for (int w : g.neighbors(v)) row |= Mask{1} << w;
      adj_[v] = row;
    }
    std::vector<Mask> cells;
    if (colours.empty()) {
      if (n_ > 0) cells.push_back(n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1);
    } else {
      std::map<int, Mask> by_colour;
      for (int v = 0; v < n_; ++v) by_colour[colours[v]] |= Mask{1} << v;
      for (const auto& [c, m] : by_colour) cells.push_back(m);
    }
    root_ = std::move(cells);
  }

  Labeling run() {
    std::vector<int> fixed;
    search(root_, fixed);
    Labeling out;
    out.order = best_lab_;
    out.code = best_code_;
    out.automorphisms = std::move(autos_);
    return out;
  }

 private:
  void refine(std::vector<Mask>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j < cells.size() && !changed; ++j) {
        const Mask splitter = cells[j];
        for (std::size_t i = 0; i < cells.size(); ++i) {
          const Mask cell = cells[i];
          if (std::has_single_bit(cell)) continue;
          std::array<Mask, 33> buckets{};
          int lo = 33, hi = -1;
          for (Mask rest = cell; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int c = std::popcount(adj_[v] & splitter);
            buckets[c] |= Mask{1} << v;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo == hi) continue;
          std::vector<Mask> parts;
          for (int c = lo; c <= hi; ++c)
            if (buckets[c]) parts.push_back(buckets[c]);
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  Code leaf_code(const std::vector<int>& lab) const {
    Code code = 0;
    for (int j = 1; j < n_; ++j) {
      const Mask row = adj_[lab[j]];
      for (int i = 0; i < j; ++i) code = (code << 1) | ((row >> lab[i]) & 1u);
    }
    return code;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    bool identity = true;
    for (int v = 0; v < n_ && identity; ++v) identity = gamma[v] == v;
    if (!identity) autos_.push_back(std::move(gamma));
  }

  void leaf(const std::vector<Mask>& cells) {
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) lab[i] = std::countr_zero(cells[i]);
    const Code code = leaf_code(lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = code;
      return;
    }
    if (code == first_code_) {
      record_automorphism(first_lab_, lab);
    } else if (code == best_code_) {
      record_automorphism(best_lab_, lab);
    } else if (code > best_code_) {
      best_code_ = code;
      best_lab_ = lab;
    }
  }

  // Representative per vertex under the automorphisms that fix `fixed` pointwise.
  std::vector<int> stabiliser_orbits(const std::vector<int>& fixed) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : autos_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find_root(parent, v), b = find_root(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find_root(parent, v);
    return parent;
  }

  void search(std::vector<Mask> cells, std::vector<int>& fixed) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (!std::has_single_bit(cells[i])) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const Mask cell = cells[target];
    std::vector<int> tried_roots;
    for (Mask rest = cell; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!tried_roots.empty()) {
        const auto orbits = stabiliser_orbits(fixed);
        const bool seen = std::any_of(tried_roots.begin(), tried_roots.end(),
                                      [&](int w) { return orbits[w] == orbits[v]; });
        if (seen) continue;
      }
      tried_roots.push_back(v);
      std::vector<Mask> child = cells;
      child[target] = Mask{1} << v;
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, cell & ~(Mask{1} << v));
      fixed.push_back(v);
      search(std::move(child), fixed);
      fixed.pop_back();
    }
  }

  int n_;
  std::array<Mask, 32> adj_{};
  std::vector<Mask> root_;
  std::vector<std::vector<int>> autos_;
  bool have_leaf_ = false;
  std::vector<int> first_lab_, best_lab_;
  Code first_code_ = 0, best_code_ = 0;
};

std::string pack_code(int n, Code code) {
  const int bits = n * (n - 1) / 2;
  std::string out(static_cast<std::size_t>((bits + 7) / 8), '\0');
  for (int b = 0; b < bits; ++b) {
    const bool bit = (code >> (bits - 1 - b)) & 1u;
    if (bit) out[static_cast<std::size_t>(b / 8)] |= static_cast<char>(0x80u >> (b % 8));
  }
  return out;
}

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

class Embedder {
 public:
  Embedder(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {
    // Most-constrained-first vertex order: maximise already-placed neighbours, then degree.
    std::vector<bool> placed(static_cast<std::size_t>(n_), false);
    for (int step = 0; step < n_; ++step) {
      int best = -1, best_links = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : g_.neighbors(v)) links += placed[w] ? 1 : 0;
        if (best < 0 || links > best_links || (links == best_links && g_.degree(v) > g_.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    image_.assign(static_cast<std::size_t>(n_), -1);
  }

  bool run() { return place(0); }

 private:
  bool place(int idx) {
    if (idx == n_) return true;
    const int x = order_[idx];
    VertexSet cand = h_.vertices() - used_;
    for (int w : g_.neighbors(x))
      if (image_[w] >= 0) cand &= h_.neighbors(image_[w]);
    for (int y : cand) {
      if (h_.degree(y) < g_.degree(x)) continue;
      image_[x] = y;
      used_.set(y);
      if (place(idx + 1)) return true;
      used_.reset(y);
      image_[x] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<int> order_;
  std::vector<int> image_;
  VertexSet used_;
};

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(n) + ":";
  for (unsigned char c : code) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

Labeling canonical_labeling(const Graph& g, const std::vector<int>& colours) {
  if (g.order() > kMaxCanonicalOrder)
    throw OrderTooLarge("canonical labeling supports n <= " + std::to_string(kMaxCanonicalOrder) + ", got " +
                        std::to_string(g.order()));
  if (!colours.empty() && static_cast<int>(colours.size()) != g.order())
    throw ParameterOutOfRange("colour vector size does not match graph order");
  if (g.order() == 0) return {};
  return Canonizer(g, colours).run();
}

CanonicalForm canonical_form(const Graph& g) {
  const auto lab = canonical_labeling(g);
  return {g.order(), pack_code(g.order(), lab.code)};
}

Graph canonical_graph(const Graph& g) {
  const auto lab = canonical_labeling(g);
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int pos = 0; pos < g.order(); ++pos) perm[lab.order[pos]] = pos;
  return permute(g, perm);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (sorted_degrees(g) != sorted_degrees(h)) return false;
  if (g.order() <= kMaxCanonicalOrder) return canonical_form(g) == canonical_form(h);
  // Equal edge counts turn a spanning embedding into an isomorphism.
  return Embedder(g, h).run();
}

bool is_spanning_subgraph_of(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    throw OrderMismatch("spanning subgraph test needs equal orders (" + std::to_string(g.order()) + " vs " +
                        std::to_string(h.order()) + ")");
  if (g.edge_count() > h.edge_count()) return false;
  const auto dg = sorted_degrees(g), dh = sorted_degrees(h);
  for (std::size_t i = 0; i < dg.size(); ++i)
    if (dg[i] > dh[i]) return false;
  return Embedder(g, h).run();
}

std::vector<int> orbit_representatives(int n, const std::vector<std::vector<int>>& generators) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& gamma : generators)
    for (int v = 0; v < n; ++v) {
      const int a = find_root(parent, v), b = find_root(parent, gamma[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (int v = 0; v < n; ++v) parent[v] = find_root(parent, v);
  return parent;
}

}  // namespace hamindex
