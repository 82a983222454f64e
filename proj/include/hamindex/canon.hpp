#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hamindex/graph.hpp"

namespace hamindex {

/// Largest order accepted by canonical labeling.
constexpr int kMaxCanonicalOrder = 16;

/// Isomorphism-class identifier: the upper triangle of the adjacency matrix
/// under the canonical vertex order, packed row-pair by row-pair.
struct CanonicalForm {
  int n = 0;
  std::string code;  // raw bytes, ceil(C(n,2)/8) of them

  std::string hex() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.code.compare(b.code) <=> 0;
  }
};

/// Output of one canonical labeling run.
struct Labeling {
  std::vector<int> order;                       // order[pos] = vertex at canonical position pos
  std::vector<std::vector<int>> automorphisms;  // generators of the (colour-preserving) group
  unsigned __int128 code = 0;
};

/// Canonical labeling by equitable refinement and individualisation with
/// automorphism pruning. `colours` (optional) gives an ordered initial
/// partition: vertices are grouped by ascending colour value. Throws
/// OrderTooLarge above kMaxCanonicalOrder.
Labeling canonical_labeling(const Graph& g, const std::vector<int>& colours = {});

CanonicalForm canonical_form(const Graph& g);
/// The graph relabelled into canonical order.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// True when some bijection maps every edge of g onto an edge of h.
/// Throws OrderMismatch when the orders differ.
bool is_spanning_subgraph_of(const Graph& g, const Graph& h);

/// Union-find orbits of {0..n-1} under a set of permutations; returns a
/// representative (smallest member) per vertex.
std::vector<int> orbit_representatives(int n, const std::vector<std::vector<int>>& generators);

}  // namespace hamindex
