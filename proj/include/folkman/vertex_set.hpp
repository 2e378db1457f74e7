#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>

namespace folkman {

/// Hard cap on graph order. Rows are two 64-bit words wide.
inline constexpr int kMaxOrder = 128;

/// Fixed-width set of vertex indices in [0, kMaxOrder).
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet singleton(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  /// The set {0, 1, ..., n-1}.
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

  static constexpr VertexSet from_words(std::uint64_t lo, std::uint64_t hi) {
    VertexSet s;
    s.w_ = {lo, hi};
    return s;
  }

  constexpr bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
  constexpr void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  constexpr void flip(int v) { w_[v >> 6] ^= std::uint64_t{1} << (v & 63); }

  constexpr int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
  constexpr bool any() const { return !empty(); }

  /// Smallest element, or -1 when empty.
  constexpr int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  /// Smallest element strictly greater than v, or -1.
  constexpr int next(int v) const {
    ++v;
    if (v >= kMaxOrder) return -1;
    int word = v >> 6;
    std::uint64_t m = w_[word] & (~std::uint64_t{0} << (v & 63));
    if (m) return (word << 6) + std::countr_zero(m);
    if (word == 0 && w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  constexpr bool is_subset_of(const VertexSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }
  constexpr bool intersects(const VertexSet& o) const {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
  }

  constexpr std::uint64_t word(int i) const { return w_[i]; }

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

  /// Total order: compares the high word first, so it matches numeric order
  /// of the 128-bit value.
  friend constexpr std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.w_[1] <=> b.w_[1]; c != 0) return c;
    return a.w_[0] <=> b.w_[0];
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    constexpr int operator*() const { return v_; }
    constexpr iterator& operator++() {
      v_ = s_->next(v_);
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* s_ = nullptr;
    int v_ = -1;
  };

  constexpr iterator begin() const { return {this, first()}; }
  constexpr iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, 2> w_{};
};

}  // namespace folkman
