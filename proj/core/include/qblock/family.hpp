#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qblock/blockers.hpp"
#include "qblock/spnfree.hpp"

namespace qblock {

// A sequence of distinct ground elements; prefixes index the recursion.
class OrderedSubset {
 public:
  OrderedSubset() = default;
  explicit OrderedSubset(std::vector<int> seq);

  int size() const { return static_cast<int>(seq_.size()); }
  int at(int i) const;
  OrderedSubset prefix(int len) const;
  OrderedSubset extended(int element) const;
  VertexMask underlying() const;
  const std::vector<int>& seq() const { return seq_; }

  friend bool operator==(const OrderedSubset&, const OrderedSubset&) = default;

 private:
  std::vector<int> seq_;
};

struct FamilyEntry {
  OrderedSubset s;
  InducedSubposet f_s;   // critical (y ∖ S)-blocker
  VertexMask z_s;        // its assigned root
  VertexMask a_s, b_s;   // elements descended by keeping / dropping members
  RootType type = RootType::kMin;
};

// One entry per ordered subset S of y with |S| ≤ |y|−1, keyed by sequence.
class BlockerFamily {
 public:
  BlockerFamily(GroundSet ground, VertexMask y);

  const GroundSet& ground() const { return ground_; }
  VertexMask y() const { return y_; }
  int k() const { return y_.count(); }

  bool has(const OrderedSubset& s) const;
  const FamilyEntry& at(const OrderedSubset& s) const;
  const std::map<std::vector<int>, FamilyEntry>& entries() const { return entries_; }

  void insert(FamilyEntry entry);  // write-once; duplicate keys rejected

 private:
  GroundSet ground_;
  VertexMask y_;
  std::map<std::vector<int>, FamilyEntry> entries_;
};

// The recursive construction. The initial entry is (f, root, ∅, ∅); each
// child (S,a) descends into the members containing a (min-type parent) or
// omitting a (max-type parent), re-criticalized for y ∖ S; roots follow the
// preference rule except at |S| = |y|−1, where the type must match the
// parent's. f must be a critical y-blocker with no induced N pattern.
BlockerFamily build_family(const InducedSubposet& f, VertexMask y,
                           RootPreference pref = RootPreference::kPreferMin);

struct FamilyCheckReport {
  bool entries_valid = true;        // critical blocker per entry + trace laws
  bool child_within_parent = true;  // F_S ⊆ F_{S'} for each prefix S' (as built)
  bool parent_within_child = true;  // the reverse reading, reported not required
  bool trace_partition = true;      // A_{S'} = A_S∩S', B_{S'} = B_S∩S'
  bool min_prefix_count = true;     // |A_S| = number of min-type strict prefixes
  bool final_level_traces = true;   // |S|=k−1: Z_S∩(y−S') ∉ {∅, y−S'}

  bool ok() const {
    return entries_valid && child_within_parent && trace_partition && min_prefix_count &&
           final_level_traces;
  }
};

FamilyCheckReport verify_family(const BlockerFamily& family);

struct PairClassification {
  bool type_equivalent = false;          // equal root types at every prefix size
  bool intersection_equivalent = false;  // equal root y-traces at every prefix size
};

// Both sequences must have size k−1.
PairClassification classify_pair(const OrderedSubset& s1, const OrderedSubset& s2,
                                 const BlockerFamily& family);

struct AntichainExtraction {
  std::vector<OrderedSubset> selected;  // largest type class, one per trace class
  std::vector<VertexMask> antichain;    // their roots; pairwise incomparable
  size_t type_class_size = 0;
  size_t max_intersection_class = 0;    // never exceeds 2
};

AntichainExtraction extract_antichain(const BlockerFamily& family);

// Smallest m with C(m, ⌊m/2⌋) ≥ t. Supported for 1 ≤ t ≤ 2^62.
int sperner_number(uint64_t t);

}  // namespace qblock
