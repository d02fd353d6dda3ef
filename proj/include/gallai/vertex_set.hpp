#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace gallai {

/// Hard upper bound on the order of any Graph.
inline constexpr int kMaxVertices = 256;

/// Fixed-capacity bitset over vertex labels [0, kMaxVertices).
///
/// Value type; all set algebra is word-parallel. Iteration yields members in
/// increasing order.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* set, int v) : set_(set), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }
  explicit VertexSet(std::span<const int> members) {
    for (int v : members) insert(v);
  }

  /// {0, 1, ..., n-1}.
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    return s;
  }
  static VertexSet singleton(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  void clear() { words_.fill(0); }

  int size() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }
  /// Smallest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int w = v >> 6;
    uint64_t cur = words_[w] & (~uint64_t{0} << (v & 63));
    while (true) {
      if (cur) return w * 64 + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Arbitrary but deterministic total order (by raw words). Use lex_less for
  /// the order of sorted member lists.
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t w : words_) h = (h ^ std::hash<uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }

  uint64_t word(int w) const { return words_[w]; }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int v : *this) {
      if (sep) s += ",";
      s += std::to_string(v);
      sep = true;
    }
    return s + "}";
  }

 private:
  std::array<uint64_t, kWords> words_{};
};

/// Lexicographic comparison of the sorted member lists.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  int x = a.first(), y = b.first();
  while (x != -1 && y != -1) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == -1 && y != -1;
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace gallai
