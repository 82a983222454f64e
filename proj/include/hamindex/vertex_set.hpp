#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace hamindex {

/// Fixed-width set of vertex indices in [0, 128).
class VertexSet {
 public:
  static constexpr int kBits = 128;

  constexpr VertexSet() = default;

  static constexpr VertexSet range(int n) {
    VertexSet s;
    if (n >= 64) {
      s.w_[0] = ~std::uint64_t{0};
      s.w_[1] = n >= 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
    } else if (n > 0) {
      s.w_[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  static constexpr VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  constexpr bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  constexpr void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  constexpr int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
  constexpr bool any() const { return !empty(); }

  /// Index of the lowest member; -1 when empty.
  constexpr int lowest() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  constexpr int pop_lowest() {
    const int v = lowest();
    if (v >= 0) reset(v);
    return v;
  }

  constexpr bool contains(const VertexSet& o) const {
    return (o.w_[0] & ~w_[0]) == 0 && (o.w_[1] & ~w_[1]) == 0;
  }
  constexpr bool intersects(const VertexSet& o) const {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  constexpr VertexSet& operator^=(const VertexSet& o) {
    w_[0] ^= o.w_[0];
    w_[1] ^= o.w_[1];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  class iterator {
   public:
    constexpr iterator() = default;
    constexpr explicit iterator(const std::array<std::uint64_t, 2>& w) : w_(w) { advance(); }
    constexpr int operator*() const { return cur_; }
    constexpr iterator& operator++() {
      advance();
      return *this;
    }
    constexpr bool operator==(const iterator& o) const { return cur_ == o.cur_; }

   private:
    constexpr void advance() {
      if (w_[0]) {
        cur_ = std::countr_zero(w_[0]);
        w_[0] &= w_[0] - 1;
      } else if (w_[1]) {
        cur_ = 64 + std::countr_zero(w_[1]);
        w_[1] &= w_[1] - 1;
      } else {
        cur_ = -1;
      }
    }
    std::array<std::uint64_t, 2> w_{};
    int cur_ = -1;
  };

  constexpr iterator begin() const { return iterator(w_); }
  constexpr iterator end() const { return iterator(); }

 private:
  std::array<std::uint64_t, 2> w_{};
};

}  // namespace hamindex
