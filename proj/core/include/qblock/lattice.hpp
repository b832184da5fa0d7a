#pragma once

#include <functional>
#include <vector>

#include "qblock/abstract_poset.hpp"
#include "qblock/ground.hpp"

namespace qblock {

// Cap on materialized lattices / coloring tables (2^20 vertices).
inline constexpr int kMaxLatticeGround = 20;

// A family of vertices of Q(ground), ordered by inclusion. Vertices are kept
// deduplicated in canonical order.
class InducedSubposet {
 public:
  InducedSubposet(GroundSet ground, std::vector<VertexMask> vertices);

  const GroundSet& ground() const { return ground_; }
  const std::vector<VertexMask>& vertices() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }
  bool empty() const { return verts_.empty(); }
  bool contains(VertexMask v) const { return index_of(v) >= 0; }
  int index_of(VertexMask v) const;  // canonical index, -1 when absent

  InducedSubposet without(VertexMask v) const;
  InducedSubposet filter(const std::function<bool(VertexMask)>& keep) const;

  // The same order as an abstract poset; element names come from the ground
  // labels. capacity_error above 64 vertices.
  AbstractPoset as_abstract() const;

  friend bool operator==(const InducedSubposet&, const InducedSubposet&) = default;

 private:
  GroundSet ground_;
  std::vector<VertexMask> verts_;
};

// All of Q(ground). capacity_error when the ground set exceeds 2^20 vertices.
InducedSubposet boolean_lattice(const GroundSet& ground);

// Total red/blue assignment on the vertices of Q(ground), indexed by raw
// mask value.
class Coloring {
 public:
  Coloring(GroundSet ground, std::vector<bool> red_by_mask);
  static Coloring monochrome(const GroundSet& ground, bool red);

  const GroundSet& ground() const { return ground_; }
  bool red(VertexMask v) const { return red_[v.bits()]; }
  bool blue(VertexMask v) const { return !red_[v.bits()]; }
  std::vector<VertexMask> red_vertices() const;   // canonical order
  std::vector<VertexMask> blue_vertices() const;  // canonical order
  long long red_count() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  GroundSet ground_;
  std::vector<bool> red_;
};

}  // namespace qblock
