#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamindex/graph.hpp"

namespace hamindex {

enum class FamilyTag { L, N, Lbar, Nbar, B, G1Item, G2Item };

/// Identifies one member of a named extremal family.
///
/// For B the order parameter `n` is the half-order (the graph has 2n
/// vertices). For G1/G2 items, `item` indexes the exceptional list in its
/// published order (0 is the parametric member) and `n` is the graph order.
struct FamilySpec {
  FamilyTag tag = FamilyTag::N;
  int n = 0;
  int k = 0;
  int item = 0;

  /// CLI syntax: "N:n=9,k=2", "B:n=3,k=1", "G1:n=7,i=1".
  static FamilySpec parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string tag_name(FamilyTag tag);

/// Throws ParameterOutOfRange when (n, k) or the item index is not allowed.
void validate(const FamilySpec& spec);
bool is_valid(const FamilySpec& spec);

Graph build(const FamilySpec& spec);
/// Closed-form edge count; L, N, Lbar, Nbar and B only.
std::int64_t edge_count(const FamilySpec& spec);

inline std::int64_t binom2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

/// One entry of an exceptional list.
struct ExceptionalMember {
  int item = 0;
  std::string name;
  Graph graph;
};

/// Fixed order of a non-parametric G1/G2 item (item 0 returns 0).
int g1_item_order(int item);
int g2_item_order(int item);
constexpr int kExceptionalListSize = 9;

std::vector<ExceptionalMember> g1_members(int n);
std::vector<ExceptionalMember> g2_members(int n);

/// Every G1 (resp. G2) member at its own order, list order, parametric
/// member at `parametric_order`.
std::vector<ExceptionalMember> g1_catalog(int parametric_order);
std::vector<ExceptionalMember> g2_catalog(int parametric_order);

/// Vertex sets of B^k_n as built: X = [0, n), Y = [n, 2n).
Bipartition b_family_parts(int half);

}  // namespace hamindex
