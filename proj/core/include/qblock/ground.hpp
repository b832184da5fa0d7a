#pragma once

#include <string>
#include <vector>

#include "qblock/mask.hpp"

namespace qblock {

inline constexpr int kMaxGroundSize = 32;

// Ordered list of distinct element labels; element i lives on mask bit i.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);
  static GroundSet numbered(int n);  // labels "1", "2", ..., "n"

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;  // invalid_input when unknown
  VertexMask all() const;
  VertexMask mask_of(const std::vector<std::string>& member_labels) const;
  std::vector<std::string> names_of(VertexMask m) const;
  std::string set_string(VertexMask m) const;  // "{1,x1}"

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace qblock
