#include "qblock/lattice.hpp"

#include <algorithm>

#include "qblock/errors.hpp"

namespace qblock {

InducedSubposet::InducedSubposet(GroundSet ground, std::vector<VertexMask> vertices)
    : ground_(std::move(ground)), verts_(std::move(vertices)) {
  for (VertexMask v : verts_)
    if (!v.subset_of(ground_.all()))
      throw invalid_input("vertex uses elements outside the ground set");
  std::sort(verts_.begin(), verts_.end(), canonical_less);
  for (std::size_t i = 1; i < verts_.size(); ++i)
    if (verts_[i] == verts_[i - 1]) throw invalid_input("duplicate vertex in subposet");
}

int InducedSubposet::index_of(VertexMask v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v, canonical_less);
  if (it != verts_.end() && *it == v) return static_cast<int>(it - verts_.begin());
  return -1;
}

InducedSubposet InducedSubposet::without(VertexMask v) const {
  std::vector<VertexMask> out;
  out.reserve(verts_.size());
  for (VertexMask w : verts_)
    if (!(w == v)) out.push_back(w);
  return InducedSubposet(ground_, std::move(out));
}

InducedSubposet InducedSubposet::filter(const std::function<bool(VertexMask)>& keep) const {
  std::vector<VertexMask> out;
  for (VertexMask w : verts_)
    if (keep(w)) out.push_back(w);
  return InducedSubposet(ground_, std::move(out));
}

AbstractPoset InducedSubposet::as_abstract() const {
  if (size() > AbstractPoset::kMaxElements)
    throw capacity_error("subposet too large to view as an abstract poset (cap 64)");
  std::vector<std::string> els;
  els.reserve(verts_.size());
  for (VertexMask v : verts_) els.push_back(ground_.set_string(v));
  std::vector<std::uint64_t> leq(verts_.size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (verts_[i].subset_of(verts_[j])) leq[i] |= std::uint64_t{1} << j;
  return AbstractPoset::from_leq(std::move(els), std::move(leq));
}

InducedSubposet boolean_lattice(const GroundSet& ground) {
  if (ground.size() > kMaxLatticeGround)
    throw capacity_error("ground set of size " + std::to_string(ground.size()) +
                         " exceeds the materialized-lattice cap " +
                         std::to_string(kMaxLatticeGround));
  return InducedSubposet(ground, submasks_of(ground.all()));
}

Coloring::Coloring(GroundSet ground, std::vector<bool> red_by_mask)
    : ground_(std::move(ground)), red_(std::move(red_by_mask)) {
  if (ground_.size() > kMaxLatticeGround)
    throw capacity_error("coloring ground set exceeds the cap " +
                         std::to_string(kMaxLatticeGround));
  if (red_.size() != (std::size_t{1} << ground_.size()))
    throw invalid_input("coloring must assign all 2^N vertices");
}

Coloring Coloring::monochrome(const GroundSet& ground, bool red) {
  if (ground.size() > kMaxLatticeGround)
    throw capacity_error("coloring ground set exceeds the cap");
  return Coloring(ground, std::vector<bool>(std::size_t{1} << ground.size(), red));
}

std::vector<VertexMask> Coloring::red_vertices() const {
  std::vector<VertexMask> out;
  for (VertexMask v : submasks_of(ground_.all()))
    if (red(v)) out.push_back(v);
  return out;
}

std::vector<VertexMask> Coloring::blue_vertices() const {
  std::vector<VertexMask> out;
  for (VertexMask v : submasks_of(ground_.all()))
    if (blue(v)) out.push_back(v);
  return out;
}

long long Coloring::red_count() const {
  long long n = 0;
  for (bool b : red_) n += b;
  return n;
}

}  // namespace qblock
