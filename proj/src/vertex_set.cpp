#include "primegraph/vertex_set.hpp"

#include <stdexcept>

namespace primegraph {

VertexSet VertexSet::range(std::size_t n) {
  if (n > capacity) throw std::length_error("vertex set capacity exceeded");
  VertexSet s;
  for (std::size_t i = 0; i < kWords && n > 0; ++i) {
    if (n >= 64) {
      s.words_[i] = ~std::uint64_t{0};
      n -= 64;
    } else {
      s.words_[i] = (std::uint64_t{1} << n) - 1;
      n = 0;
    }
  }
  return s;
}

VertexSet VertexSet::from(const std::vector<Vertex>& members) {
  VertexSet s;
  for (Vertex v : members) {
    if (v >= capacity) throw std::out_of_range("vertex label exceeds set capacity");
    s.insert(v);
  }
  return s;
}

Vertex VertexSet::front() const {
  for (std::size_t i = 0; i < kWords; ++i)
    if (words_[i]) return i * 64 + static_cast<Vertex>(std::countr_zero(words_[i]));
  return capacity;
}

Vertex VertexSet::next_after(Vertex v) const {
  ++v;
  if (v >= capacity) return capacity;
  std::size_t i = v >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
  while (true) {
    if (w) return i * 64 + static_cast<Vertex>(std::countr_zero(w));
    if (++i == kWords) return capacity;
    w = words_[i];
  }
}

namespace {

bool has_member_above(const VertexSet& s, Vertex pos) { return s.next_after(pos) < VertexSet::capacity; }

}  // namespace

bool lex_less(const VertexSet& a, const VertexSet& b) {
  // The lowest label in the symmetric difference decides. If a owns it, a is
  // smaller unless b's list stops there (b is then a proper prefix of a).
  for (std::size_t i = 0; i < VertexSet::kWords; ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (!diff) continue;
    Vertex pos = i * 64 + static_cast<Vertex>(std::countr_zero(diff));
    if (a.contains(pos)) return has_member_above(b, pos);
    return !has_member_above(a, pos);
  }
  return false;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace primegraph
