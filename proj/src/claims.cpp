#include <algorithm>
#include <array>

#include "hamindex/errors.hpp"
#include "hamindex/verify.hpp"

namespace hamindex {
namespace {

struct NameEntry {
  TheoremId id;
  const char* name;
};

constexpr std::array<NameEntry, 16> kNames{{
    {TheoremId::Fact31, "Fact3.1"},
    {TheoremId::Fact51, "Fact5.1"},
    {TheoremId::Thm21, "Thm2.1"},
    {TheoremId::Thm22, "Thm2.2"},
    {TheoremId::Lem23, "Lem2.3"},
    {TheoremId::Lem24, "Lem2.4"},
    {TheoremId::Thm32, "Thm3.2"},
    {TheoremId::Thm33, "Thm3.3"},
    {TheoremId::Thm34, "Thm3.4"},
    {TheoremId::Thm35, "Thm3.5"},
    {TheoremId::Lem41, "Lem4.1"},
    {TheoremId::Lem42, "Lem4.2"},
    {TheoremId::Thm43, "Thm4.3"},
    {TheoremId::Thm44, "Thm4.4"},
    {TheoremId::Lem51, "Lem5.1"},
    {TheoremId::Thm51Bip, "Thm5.1bip"},
}};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

std::string theorem_name(TheoremId id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.name;
  return "?";
}

TheoremId parse_theorem_id(const std::string& text) {
  const std::string want = lower(text);
  for (const auto& e : kNames)
    if (lower(e.name) == want) return e.id;
  std::string known;
  for (const auto& e : kNames) known += (known.empty() ? "" : ", ") + std::string(e.name);
  throw ParseError("unknown claim id '" + text + "' (known: " + known + ")");
}

std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> out;
  for (const auto& e : kNames) out.push_back(e.id);
  return out;
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::Wiener:
      return "W";
    case Branch::Harary:
      return "H";
    case Branch::None:
      break;
  }
  return "-";
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto:
      return "auto";
    case Strategy::Full:
      return "full";
    case Strategy::Complement:
      return "complement";
    case Strategy::Closure:
      return "closure";
    case Strategy::Bipartite:
      return "bipartite";
  }
  return "?";
}

Strategy parse_strategy(const std::string& text) {
  for (Strategy s : {Strategy::Auto, Strategy::Full, Strategy::Complement, Strategy::Closure, Strategy::Bipartite})
    if (strategy_name(s) == lower(text)) return s;
  throw ParseError("unknown strategy '" + text + "'");
}

int fixed_k(TheoremId id) {
  switch (id) {
    case TheoremId::Lem23:
    case TheoremId::Thm32:
      return 2;
    case TheoremId::Lem24:
    case TheoremId::Thm33:
    case TheoremId::Thm34:
    case TheoremId::Thm35:
      return 1;
    default:
      return -1;
  }
}

bool in_stated_range(TheoremId id, int n, int k) {
  if (fixed_k(id) >= 0 && k != fixed_k(id)) return false;
  switch (id) {
    case TheoremId::Fact31:
      return n >= 1;
    case TheoremId::Fact51:
      return n >= 1;
    case TheoremId::Thm21:
      return k >= 1 && 2 * k <= n - 1;
    case TheoremId::Thm22:
      return k >= 1 && n >= 6 * k;
    case TheoremId::Lem23:
    case TheoremId::Thm32:
      return n >= 5;
    case TheoremId::Lem24:
    case TheoremId::Thm33:
    case TheoremId::Thm34:
    case TheoremId::Thm35:
      return n >= 4;
    case TheoremId::Lem41:
    case TheoremId::Thm43:
      return k >= 1 && n >= 6 * k + 5;
    case TheoremId::Lem42:
      return k >= 0 && n >= 6 * k + 10;
    case TheoremId::Thm44:
      return k >= 1 && n >= 6 * k + 10;
    case TheoremId::Lem51:
      return k >= 1 && n >= 2 * k + 1;
    case TheoremId::Thm51Bip:
      return k >= 1 && n >= 2 * k + 2;
  }
  return false;
}

EdgeThreshold edge_threshold(TheoremId id, int n, int k, bool allow_out_of_range) {
  if (!allow_out_of_range && !in_stated_range(id, n, k))
    throw ParameterOutOfStatedRange(theorem_name(id) + " is not stated for n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
  const std::int64_t N = n, K = k;
  switch (id) {
    case TheoremId::Thm21: {
      const std::int64_t a = binom2(N - K) + K * K;
      const std::int64_t b = binom2((N + 2) / 2) + ((N - 1) / 2) * ((N - 1) / 2);
      return {std::max(a, b), true};
    }
    case TheoremId::Thm22:
      return {binom2(N - K) + K * K, true};
    case TheoremId::Lem23:
      return {binom2(N - 2) + 4, false};
    case TheoremId::Lem24:
      return {binom2(N - 2) + 2, false};
    case TheoremId::Lem41:
      return {binom2(N - K - 1) + (K + 1) * (K + 1), true};
    case TheoremId::Lem42:
      return {binom2(N - K - 2) + (K + 1) * (K + 2), true};
    case TheoremId::Lem51:
      return {N * (N - K - 1) + (K + 1) * (K + 1), true};
    default:
      throw UnsupportedFamily(theorem_name(id) + " has no edge hypothesis");
  }
}

}  // namespace hamindex
