#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qblock {

// A vertex of a Boolean lattice: the set of ground elements it contains, one
// bit per element index. Ground sets are capped at 32 elements, so a vertex
// always fits in 32 bits.
class VertexMask {
 public:
  constexpr VertexMask() = default;
  constexpr explicit VertexMask(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexMask empty_set() { return VertexMask(0); }
  static VertexMask of(std::initializer_list<int> elements) {
    std::uint32_t b = 0;
    for (int e : elements) b |= std::uint32_t{1} << e;
    return VertexMask(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool test(int element) const { return (bits_ >> element) & 1u; }
  constexpr bool subset_of(VertexMask o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(VertexMask o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool comparable_with(VertexMask o) const { return subset_of(o) || o.subset_of(*this); }

  constexpr VertexMask with(int element) const {
    return VertexMask(bits_ | (std::uint32_t{1} << element));
  }
  constexpr VertexMask without(int element) const {
    return VertexMask(bits_ & ~(std::uint32_t{1} << element));
  }
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr VertexMask operator|(VertexMask a, VertexMask b) { return VertexMask(a.bits_ | b.bits_); }
  friend constexpr VertexMask operator&(VertexMask a, VertexMask b) { return VertexMask(a.bits_ & b.bits_); }
  // set difference
  friend constexpr VertexMask operator-(VertexMask a, VertexMask b) { return VertexMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexMask a, VertexMask b) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Canonical vertex order used everywhere: ascending (|mask|, numeric value).
// It is a linear extension of inclusion, since A ⊂ B forces |A| < |B|.
constexpr bool canonical_less(VertexMask a, VertexMask b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits() < b.bits();
}

// All submasks of `space`, canonically ordered.
std::vector<VertexMask> submasks_of(VertexMask space);

}  // namespace qblock
