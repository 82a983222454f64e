#pragma once

#include <cstdint>
#include <vector>

#include "hamindex/families.hpp"
#include "hamindex/graph.hpp"
#include "hamindex/rational.hpp"

namespace hamindex {

/// All-pairs hop distances. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(int u, int v, int d) { d_[static_cast<std::size_t>(u) * n_ + v] = d; }

  bool all_reachable() const;
  /// Largest finite entry (0 for n <= 1).
  int diameter() const;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// Number of unordered pairs at each distance; index 0 counts unreachable pairs.
std::vector<std::int64_t> distance_histogram(const Graph& g);

std::int64_t wiener_index(const Graph& g);
Rational harary_index(const Graph& g);
/// Throws DisconnectedGraph.
int diameter(const Graph& g);

/// W and H from one BFS sweep, for bulk use.
struct DistanceIndices {
  std::int64_t wiener = 0;
  Rational harary;
  int diameter = 0;
};
DistanceIndices distance_indices(const Graph& g);

struct Fact31Check {
  std::int64_t slack_w = 0;  // W + e - n(n-1)
  Rational slack_h;          // e - (2H - C(n,2))
  int diameter = 0;
};
Fact31Check check_fact_3_1(const Graph& g);

struct Fact51Check {
  std::int64_t slack_w = 0;    // W - [e + 3(n^2 - e) + 4 C(n,2)]
  Rational slack_h;            // [e + (n^2 - e)/3 + C(n,2)] - H
  bool equality_condition = false;
};
/// G must be connected and balanced bipartite with respect to `parts`.
Fact51Check check_fact_5_1(const Graph& g, const Bipartition& parts);

struct ClosedForm {
  std::int64_t e = 0;
  std::int64_t wiener = 0;
  Rational harary;
};
/// e, W and H for L, N, Nbar (diameter 2) and B from the edge formula and the
/// distance identities. Throws UnsupportedFamily for Lbar and G1/G2 items, and
/// DisconnectedGraph for Nbar with k = 0.
ClosedForm closed_form_wh(const FamilySpec& spec);

/// Diameter-2 identities: W = n(n-1) - e, H = (e + C(n,2)) / 2.
std::int64_t diameter_two_wiener(std::int64_t n, std::int64_t e);
Rational diameter_two_harary(std::int64_t n, std::int64_t e);
/// Balanced bipartite (half-order n) identities: W = 5n^2 - 2n - 2e,
/// H = e + (n^2 - e)/3 + C(n,2).
std::int64_t bipartite_wiener(std::int64_t half, std::int64_t e);
Rational bipartite_harary(std::int64_t half, std::int64_t e);

}  // namespace hamindex
