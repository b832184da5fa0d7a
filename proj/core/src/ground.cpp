#include "qblock/ground.hpp"

#include <set>

#include "qblock/errors.hpp"

namespace qblock {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxGroundSize)
    throw capacity_error("ground set has " + std::to_string(labels_.size()) +
                         " elements; the cap is " + std::to_string(kMaxGroundSize));
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw invalid_input("ground element labels must be non-empty");
    if (!seen.insert(l).second) throw invalid_input("duplicate ground element label: " + l);
  }
}

GroundSet GroundSet::numbered(int n) {
  if (n < 0) throw invalid_input("ground size must be non-negative");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  throw invalid_input("unknown ground element label: " + label);
}

VertexMask GroundSet::all() const {
  if (labels_.empty()) return VertexMask(0);
  return VertexMask(static_cast<std::uint32_t>((std::uint64_t{1} << labels_.size()) - 1));
}

VertexMask GroundSet::mask_of(const std::vector<std::string>& member_labels) const {
  VertexMask m;
  for (const auto& l : member_labels) {
    int i = index_of(l);
    if (m.test(i)) throw invalid_input("duplicate member in vertex: " + l);
    m = m.with(i);
  }
  return m;
}

std::vector<std::string> GroundSet::names_of(VertexMask m) const {
  std::vector<std::string> out;
  for (int e : m.elements()) {
    if (e >= size()) throw invalid_input("mask bit outside the ground set");
    out.push_back(labels_[e]);
  }
  return out;
}

std::string GroundSet::set_string(VertexMask m) const {
  std::string out = "{";
  bool first = true;
  for (const auto& name : names_of(m)) {
    if (!first) out += ",";
    out += name;
    first = false;
  }
  return out + "}";
}

}  // namespace qblock
