#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace primegraph {

using Vertex = std::size_t;

// Fixed-capacity bitset over vertex labels 0..capacity-1. Every graph, poset and
// incidence structure in the library stores its rows as VertexSets, so the
// capacity is also the maximum structure size.
class VertexSet {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t capacity = kWords * 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  // {0, ..., n-1}
  static VertexSet range(std::size_t n);
  static VertexSet from(const std::vector<Vertex>& members);

  bool contains(Vertex v) const { return v < capacity && ((words_[v >> 6] >> (v & 63)) & 1u); }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void set(Vertex v, bool value) { value ? insert(v) : erase(v); }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  // Least member, or capacity when empty.
  Vertex front() const;
  // Least member strictly greater than v, or capacity.
  Vertex next_after(Vertex v) const;

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const VertexSet& other) const { return is_subset_of(other) && *this != other; }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement relative to {0..n-1}.
  VertexSet complement(std::size_t n) const { return range(n) - *this; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Total order: first by cardinality, then lexicographically on the sorted
  // member lists. This is the canonical order of lattice elements.
  friend bool canonical_less(const VertexSet& a, const VertexSet& b);
  // Lexicographic comparison of sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  std::vector<Vertex> members() const;
  std::size_t hash() const;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, Vertex pos) : set_(set), pos_(pos) {}
    Vertex operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = set_->next_after(pos_);
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex pos_ = capacity;
  };
  iterator begin() const { return {this, front()}; }
  iterator end() const { return {this, capacity}; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

bool canonical_less(const VertexSet& a, const VertexSet& b);
bool lex_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace primegraph
