#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace herencode {

using Vertex = std::uint32_t;

// Subset of {1..universe}. Vertex v occupies bit v-1.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> vs) : bits_(universe) {
    for (Vertex v : vs) insert(v);
  }
  VertexSet(std::size_t universe, const std::vector<Vertex>& vs) : bits_(universe) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(Vertex v) const { return v >= 1 && v <= bits_.size() && bits_.test(v - 1); }
  void insert(Vertex v) { bits_.set(v - 1); }
  void erase(Vertex v) { bits_.reset(v - 1); }
  void clear() { bits_.reset(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  // 0 when there is no such vertex.
  Vertex first() const {
    auto i = bits_.find_first();
    return i == Bits::npos ? 0 : static_cast<Vertex>(i + 1);
  }
  Vertex next(Vertex v) const {
    auto i = bits_.find_next(v - 1);
    return i == Bits::npos ? 0 : static_cast<Vertex>(i + 1);
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(static_cast<Vertex>(i + 1));
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }
  bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }

  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator^=(const VertexSet& o) { bits_ ^= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }
  VertexSet complement() const {
    VertexSet s(*this);
    s.bits_.flip();
    return s;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  // Lexicographic order of the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    Vertex x = a.first(), y = b.first();
    while (x != 0 && y != 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x == 0 && y != 0;
  }

  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

}  // namespace herencode
