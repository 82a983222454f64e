#include "hamindex/families.hpp"

#include <array>
#include <functional>
#include <sstream>

namespace hamindex {
namespace {

Graph star(int leaves) { return complete_bipartite(1, leaves).first; }
Graph kbip(int a, int b) { return complete_bipartite(a, b).first; }

struct CatalogEntry {
  int order;  // 0 for the parametric member
  const char* name;
  std::function<Graph(int)> make;
};

// Members are assembled from their formulas so the join/union algebra is exercised.
const std::array<CatalogEntry, kExceptionalListSize>& g1_table() {
  static const std::array<CatalogEntry, kExceptionalListSize> table{{
      {0, "K2 v (K{n-4} + 2K1)",
       [](int n) { return join(complete(2), disjoint_union(complete(n - 4), empty(2))); }},
      {7, "K3 v 4K1", [](int) { return join(complete(3), empty(4)); }},
      {7, "K2 v (K1,3 + K1)", [](int) { return join(complete(2), disjoint_union(star(3), empty(1))); }},
      {7, "K1 v K2,4", [](int) { return join(complete(1), kbip(2, 4)); }},
      {8, "K3 v (K2 + 3K1)", [](int) { return join(complete(3), disjoint_union(complete(2), empty(3))); }},
      {9, "K4 v 5K1", [](int) { return join(complete(4), empty(5)); }},
      {9, "K3 v (K1,4 + K1)", [](int) { return join(complete(3), disjoint_union(star(4), empty(1))); }},
      {9, "K2 v K2,5", [](int) { return join(complete(2), kbip(2, 5)); }},
      {11, "K5 v 6K1", [](int) { return join(complete(5), empty(6)); }},
  }};
  return table;
}

const std::array<CatalogEntry, kExceptionalListSize>& g2_table() {
  static const std::array<CatalogEntry, kExceptionalListSize> table{{
      {0, "K1 v (K{n-3} + 2K1)",
       [](int n) { return join(complete(1), disjoint_union(complete(n - 3), empty(2))); }},
      {6, "K2 v 4K1", [](int) { return join(complete(2), empty(4)); }},
      {6, "K1 v (K1,3 + K1)", [](int) { return join(complete(1), disjoint_union(star(3), empty(1))); }},
      {6, "K2,4", [](int) { return kbip(2, 4); }},
      {7, "K2 v (3K1 + K2)", [](int) { return join(complete(2), disjoint_union(empty(3), complete(2))); }},
      {8, "K3 v 5K1", [](int) { return join(complete(3), empty(5)); }},
      {8, "K2 v (K1,4 + K1)", [](int) { return join(complete(2), disjoint_union(star(4), empty(1))); }},
      {8, "K1 v K2,5", [](int) { return join(complete(1), kbip(2, 5)); }},
      {10, "K4 v 6K1", [](int) { return join(complete(4), empty(6)); }},
  }};
  return table;
}

constexpr int kG1MinOrder = 5;
constexpr int kG2MinOrder = 4;

int min_parametric_order(FamilyTag tag) { return tag == FamilyTag::G1Item ? kG1MinOrder : kG2MinOrder; }

const std::array<CatalogEntry, kExceptionalListSize>& table_for(FamilyTag tag) {
  return tag == FamilyTag::G1Item ? g1_table() : g2_table();
}

ExceptionalMember materialize(FamilyTag tag, int item, int n) {
  const auto& entry = table_for(tag)[item];
  Graph g = entry.make(n);
  std::string name = entry.name;
  g.set_label((tag == FamilyTag::G1Item ? "G1[" : "G2[") + std::to_string(item) + "] " + name);
  return {item, std::move(name), std::move(g)};
}

std::vector<ExceptionalMember> members_of_order(FamilyTag tag, int n) {
  std::vector<ExceptionalMember> out;
  if (n >= min_parametric_order(tag)) out.push_back(materialize(tag, 0, n));
  for (int i = 1; i < kExceptionalListSize; ++i)
    if (table_for(tag)[i].order == n) out.push_back(materialize(tag, i, n));
  return out;
}

std::vector<ExceptionalMember> catalog(FamilyTag tag, int parametric_order) {
  std::vector<ExceptionalMember> out;
  out.push_back(materialize(tag, 0, parametric_order));
  for (int i = 1; i < kExceptionalListSize; ++i) out.push_back(materialize(tag, i, table_for(tag)[i].order));
  return out;
}

}  // namespace

std::string tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::L: return "L";
    case FamilyTag::N: return "N";
    case FamilyTag::Lbar: return "Lbar";
    case FamilyTag::Nbar: return "Nbar";
    case FamilyTag::B: return "B";
    case FamilyTag::G1Item: return "G1";
    case FamilyTag::G2Item: return "G2";
  }
  return "?";
}

FamilySpec FamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("family spec needs 'TAG:key=value,...': " + text);
  const std::string tag = text.substr(0, colon);
  FamilySpec spec;
  if (tag == "L") spec.tag = FamilyTag::L;
  else if (tag == "N") spec.tag = FamilyTag::N;
  else if (tag == "Lbar") spec.tag = FamilyTag::Lbar;
  else if (tag == "Nbar") spec.tag = FamilyTag::Nbar;
  else if (tag == "B") spec.tag = FamilyTag::B;
  else if (tag == "G1") spec.tag = FamilyTag::G1Item;
  else if (tag == "G2") spec.tag = FamilyTag::G2Item;
  else throw ParseError("unknown family tag '" + tag + "'");

  bool has_n = false, has_k = false, has_i = false;
  std::istringstream fields(text.substr(colon + 1));
  std::string field;
  while (std::getline(fields, field, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("family field needs key=value: " + field);
    const std::string key = field.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(field.substr(eq + 1), &used);
      if (used != field.size() - eq - 1) throw std::invalid_argument(field);
    } catch (const std::logic_error&) {
      throw ParseError("family field is not an integer: " + field);
    }
    if (key == "n") { spec.n = value; has_n = true; }
    else if (key == "k") { spec.k = value; has_k = true; }
    else if (key == "i") { spec.item = value; has_i = true; }
    else throw ParseError("unknown family field '" + key + "'");
  }
  const bool exceptional = spec.tag == FamilyTag::G1Item || spec.tag == FamilyTag::G2Item;
  if (exceptional) {
    if (!has_i) throw ParseError("G1/G2 specs need i=");
    if (!has_n) {
      if (spec.item < 1 || spec.item >= kExceptionalListSize) throw ParseError("G1/G2 parametric item needs n=");
      spec.n = spec.tag == FamilyTag::G1Item ? g1_item_order(spec.item) : g2_item_order(spec.item);
    }
  } else if (!has_n || !has_k) {
    throw ParseError("family spec needs both n= and k=: " + text);
  }
  return spec;
}

std::string FamilySpec::str() const {
  if (tag == FamilyTag::G1Item || tag == FamilyTag::G2Item)
    return tag_name(tag) + ":n=" + std::to_string(n) + ",i=" + std::to_string(item);
  return tag_name(tag) + ":n=" + std::to_string(n) + ",k=" + std::to_string(k);
}

int g1_item_order(int item) { return g1_table().at(static_cast<std::size_t>(item)).order; }
int g2_item_order(int item) { return g2_table().at(static_cast<std::size_t>(item)).order; }

void validate(const FamilySpec& s) {
  auto fail = [&](const std::string& why) { throw ParameterOutOfRange(s.str() + ": " + why); };
  switch (s.tag) {
    case FamilyTag::L:
    case FamilyTag::N:
      if (s.k < 1 || 2 * s.k > s.n - 1) fail("requires 1 <= k <= (n-1)/2");
      break;
    case FamilyTag::Lbar:
    case FamilyTag::Nbar:
      if (s.k < 0 || 2 * s.k + 2 > s.n) fail("requires 0 <= k <= n/2 - 1");
      break;
    case FamilyTag::B:
      if (s.k < 1 || 2 * s.k > s.n) fail("requires 1 <= k <= n/2");
      if (2 * s.n > Graph::kCapacity) fail("2n exceeds graph capacity");
      break;
    case FamilyTag::G1Item:
    case FamilyTag::G2Item: {
      if (s.item < 0 || s.item >= kExceptionalListSize) fail("item index must be in 0..8");
      if (s.item == 0) {
        if (s.n < min_parametric_order(s.tag)) fail("parametric member needs a larger order");
      } else if (table_for(s.tag)[s.item].order != s.n) {
        fail("item has fixed order " + std::to_string(table_for(s.tag)[s.item].order));
      }
      break;
    }
  }
  if (s.tag != FamilyTag::B && s.n > Graph::kCapacity) fail("order exceeds graph capacity");
}

bool is_valid(const FamilySpec& spec) {
  try {
    validate(spec);
    return true;
  } catch (const ParameterOutOfRange&) {
    return false;
  }
}

Graph build(const FamilySpec& s) {
  validate(s);
  const int n = s.n, k = s.k;
  Graph g;
  switch (s.tag) {
    case FamilyTag::L:
      g = join(complete(1), disjoint_union(complete(k), complete(n - k - 1)));
      break;
    case FamilyTag::N:
      g = join(complete(k), disjoint_union(complete(n - 2 * k), empty(k)));
      break;
    case FamilyTag::Lbar:
      g = disjoint_union(complete(k + 1), complete(n - k - 1));
      break;
    case FamilyTag::Nbar:
      g = join(complete(k), disjoint_union(complete(n - 2 * k - 1), empty(k + 1)));
      break;
    case FamilyTag::B: {
      g = complete_bipartite(n, n).first;
      // X' = first n-k vertices of X, Y' = first k vertices of Y.
      for (int x = 0; x < n - k; ++x)
        for (int y = n; y < n + k; ++y) g.remove_edge(x, y);
      break;
    }
    case FamilyTag::G1Item:
    case FamilyTag::G2Item:
      return materialize(s.tag, s.item, n).graph;
  }
  g.set_label(s.str());
  return g;
}

std::int64_t edge_count(const FamilySpec& s) {
  validate(s);
  const std::int64_t n = s.n, k = s.k;
  switch (s.tag) {
    case FamilyTag::L: return binom2(n - k) + (k + 1) * k / 2;
    case FamilyTag::N: return binom2(n - k) + k * k;
    case FamilyTag::Lbar: return binom2(k + 1) + binom2(n - k - 1);
    case FamilyTag::Nbar: return binom2(n - k - 1) + k * (k + 1);
    case FamilyTag::B: return n * (n - k) + k * k;
    case FamilyTag::G1Item:
    case FamilyTag::G2Item: break;
  }
  throw UnsupportedFamily("no closed-form edge count for " + s.str());
}

std::vector<ExceptionalMember> g1_members(int n) { return members_of_order(FamilyTag::G1Item, n); }
std::vector<ExceptionalMember> g2_members(int n) { return members_of_order(FamilyTag::G2Item, n); }
std::vector<ExceptionalMember> g1_catalog(int parametric_order) { return catalog(FamilyTag::G1Item, parametric_order); }
std::vector<ExceptionalMember> g2_catalog(int parametric_order) { return catalog(FamilyTag::G2Item, parametric_order); }

Bipartition b_family_parts(int half) {
  return {VertexSet::range(half), VertexSet::range(2 * half) - VertexSet::range(half)};
}

}  // namespace hamindex
