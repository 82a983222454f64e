#include "hamindex/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace hamindex {
namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw DisconnectedGraph(std::string(what) + " is undefined for a disconnected graph");
}

Rational harary_from_histogram(const std::vector<std::int64_t>& hist) {
  BigInt lcm = 1;
  for (std::size_t d = 1; d < hist.size(); ++d)
    if (hist[d] != 0) lcm = boost::multiprecision::lcm(lcm, BigInt(d));
  BigInt num = 0;
  for (std::size_t d = 1; d < hist.size(); ++d)
    if (hist[d] != 0) num += BigInt(hist[d]) * (lcm / d);
  return Rational(num, lcm);
}

}  // namespace

bool DistanceMatrix::all_reachable() const {
  return std::none_of(d_.begin(), d_.end(), [](int d) { return d == kUnreachable; });
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int d : d_) best = std::max(best, d);
  return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  const VertexSet all = g.vertices();
  for (int s = 0; s < n; ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    for (int dist = 0; frontier.any(); ++dist) {
      for (int v : frontier) dm.set(s, v, dist);
      VertexSet next;
      for (int u : frontier) next |= g.neighbors(u);
      next &= all;
      next -= seen;
      seen |= next;
      frontier = next;
    }
  }
  return dm;
}

std::vector<std::int64_t> distance_histogram(const Graph& g) {
  const int n = g.order();
  std::vector<std::int64_t> hist(1, 0);
  for (int s = 0; s < n; ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    for (int dist = 1;; ++dist) {
      VertexSet next;
      for (int u : frontier) next |= g.neighbors(u);
      next -= seen;
      if (next.empty()) break;
      // Count only pairs (s, v) with v > s.
      const int later = (next - VertexSet::range(s + 1)).count();
      if (static_cast<int>(hist.size()) <= dist) hist.resize(static_cast<std::size_t>(dist) + 1, 0);
      hist[static_cast<std::size_t>(dist)] += later;
      seen |= next;
      frontier = next;
    }
    hist[0] += (g.vertices() - seen - VertexSet::range(s + 1)).count();
  }
  return hist;
}

DistanceIndices distance_indices(const Graph& g) {
  const auto hist = distance_histogram(g);
  if (hist[0] != 0) throw DisconnectedGraph("distance indices are undefined for a disconnected graph");
  DistanceIndices out;
  for (std::size_t d = 1; d < hist.size(); ++d) {
    out.wiener += static_cast<std::int64_t>(d) * hist[d];
    if (hist[d] != 0) out.diameter = static_cast<int>(d);
  }
  out.harary = harary_from_histogram(hist);
  return out;
}

std::int64_t wiener_index(const Graph& g) {
  require_connected(g, "Wiener index");
  return distance_indices(g).wiener;
}

Rational harary_index(const Graph& g) {
  require_connected(g, "Harary index");
  return distance_indices(g).harary;
}

int diameter(const Graph& g) {
  require_connected(g, "diameter");
  return distance_indices(g).diameter;
}

Fact31Check check_fact_3_1(const Graph& g) {
  const auto idx = distance_indices(g);
  const std::int64_t n = g.order();
  const std::int64_t e = g.edge_count();
  Fact31Check out;
  out.slack_w = idx.wiener + e - n * (n - 1);
  out.slack_h = Rational(e) - (Rational(2) * idx.harary - Rational(binom2(n)));
  out.diameter = idx.diameter;
  return out;
}

Fact51Check check_fact_5_1(const Graph& g, const Bipartition& parts) {
  const VertexSet all = g.vertices();
  const int half = parts.left.count();
  if (parts.right.count() != half || parts.left.intersects(parts.right) || (parts.left | parts.right) != all)
    throw NotBalancedBipartite("parts do not split the vertex set into two equal halves");
  for (int v : parts.left)
    if (g.neighbors(v).intersects(parts.left)) throw NotBalancedBipartite("edge inside the left part");
  for (int v : parts.right)
    if (g.neighbors(v).intersects(parts.right)) throw NotBalancedBipartite("edge inside the right part");
  require_connected(g, "bipartite slack check");

  const auto dm = all_pairs_distances(g);
  const auto idx = distance_indices(g);
  const std::int64_t n = half;
  const std::int64_t e = g.edge_count();

  Fact51Check out;
  out.slack_w = idx.wiener - (e + 3 * (n * n - e) + 4 * binom2(n));
  out.slack_h = Rational(e) + Rational(n * n - e) / Rational(3) + Rational(binom2(n)) - idx.harary;
  out.equality_condition = true;
  for (int u = 0; u < g.order() && out.equality_condition; ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const bool same = parts.left.test(u) == parts.left.test(v);
      const int d = dm(u, v);
      if ((same && d != 2) || (!same && d > 3)) {
        out.equality_condition = false;
        break;
      }
    }
  }
  return out;
}

std::int64_t diameter_two_wiener(std::int64_t n, std::int64_t e) { return n * (n - 1) - e; }

Rational diameter_two_harary(std::int64_t n, std::int64_t e) {
  return Rational(BigInt(e + binom2(n)), BigInt(2));
}

std::int64_t bipartite_wiener(std::int64_t half, std::int64_t e) { return 5 * half * half - 2 * half - 2 * e; }

Rational bipartite_harary(std::int64_t half, std::int64_t e) {
  return Rational(e) + Rational(half * half - e) / Rational(3) + Rational(binom2(half));
}

ClosedForm closed_form_wh(const FamilySpec& spec) {
  ClosedForm out;
  switch (spec.tag) {
    case FamilyTag::L:
    case FamilyTag::N:
    case FamilyTag::Nbar:
      out.e = edge_count(spec);
      if (spec.tag == FamilyTag::Nbar && spec.k == 0)
        throw DisconnectedGraph(spec.str() + " is disconnected; W and H are undefined");
      out.wiener = diameter_two_wiener(spec.n, out.e);
      out.harary = diameter_two_harary(spec.n, out.e);
      return out;
    case FamilyTag::B:
      out.e = edge_count(spec);
      out.wiener = bipartite_wiener(spec.n, out.e);
      out.harary = bipartite_harary(spec.n, out.e);
      return out;
    case FamilyTag::Lbar:
    case FamilyTag::G1Item:
    case FamilyTag::G2Item:
      break;
  }
  throw UnsupportedFamily("no closed-form W/H for " + spec.str() + "; compute directly");
}

}  // namespace hamindex
