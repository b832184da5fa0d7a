#include "qblock/mask.hpp"

#include <algorithm>

namespace qblock {

std::vector<VertexMask> submasks_of(VertexMask space) {
  std::vector<VertexMask> out;
  const std::uint32_t m = space.bits();
  std::uint32_t s = 0;
  while (true) {
    out.push_back(VertexMask(s));
    if (s == m) break;
    s = (s - m) & m;  // next submask in ascending numeric order
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace qblock
