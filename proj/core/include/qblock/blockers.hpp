#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>

#include "qblock/lattice.hpp"
#include "qblock/morphisms.hpp"

namespace qblock {

// A family f ⊆ Q(Z) blocks y ⊆ Z when every (Z∖y)-good copy of Q(Z∖y)
// meets f.
enum class BlockerStrategy {
  kHomomorphism,  // decide by searching for an avoiding order-preserving map
  kEnumeration,   // decide by walking the copies directly
};

struct BlockerCertificate {
  bool blocker = false;
  BlockerStrategy strategy = BlockerStrategy::kHomomorphism;
  long long work = 0;  // search nodes (homomorphism) or copies inspected
  // Populated on a negative verdict, in both equivalent forms: a map that
  // avoids every trace value, and the disjoint copy built from it.
  std::optional<SetMap> avoiding_map;
  std::optional<XGoodEmbedding> disjoint_copy;
};

BlockerCertificate is_blocker(const InducedSubposet& f, VertexMask y,
                              BlockerStrategy strategy = BlockerStrategy::kHomomorphism);

// Memoized verdicts over the subfamilies of one small lattice, keyed by the
// family's vertex bitmap (bit v set ⇔ the vertex with mask v is present).
// Ground sets of up to 5 elements fit the 32-bit key.
class BlockerCache {
 public:
  BlockerCache(GroundSet ground, VertexMask y);

  const GroundSet& ground() const { return ground_; }
  VertexMask y() const { return y_; }

  uint32_t bitmap_of(const InducedSubposet& f) const;
  InducedSubposet family_of(uint32_t bitmap) const;

  bool is_blocker_bitmap(uint32_t bitmap);
  bool is_blocker(const InducedSubposet& f);

  long long lookups() const { return lookups_; }
  long long computed() const { return computed_; }

 private:
  GroundSet ground_;
  VertexMask y_;
  std::unordered_map<uint32_t, bool> memo_;
  long long lookups_ = 0;
  long long computed_ = 0;
};

// Blocker with no deletable vertex. Since blocking is preserved by adding
// vertices, this is the same as having no proper blocking subfamily.
bool is_critical_blocker(const InducedSubposet& f, VertexMask y, BlockerCache* cache = nullptr);

// Deterministic greedy reduction to a critical blocker: repeatedly delete
// the first vertex, in canonical order, whose removal keeps the family
// blocking; restart the scan after each deletion. invalid_input if f does
// not block y.
InducedSubposet criticalize(const InducedSubposet& f, VertexMask y, BlockerCache* cache = nullptr);

// The subfamily of members containing (or omitting) one element of y. For a
// critical y-blocker either restriction blocks y ∖ {element}.
InducedSubposet restrict_blocker(const InducedSubposet& f, VertexMask y, int element,
                                 bool containing);

// Structural facts that hold for every critical y-blocker: each of the
// 2^|y| trace classes {F : F ∩ y = T} is nonempty (so the family has at
// least 2^|y| members), the classes of trace ∅ and trace y are antichains,
// the comparability graph is connected, and for every a ∈ y both
// restrictions block y ∖ {a}.
struct CriticalStructureReport {
  bool parts_nonempty = false;
  bool size_at_least_parts = false;
  bool empty_trace_antichain = false;
  bool full_trace_antichain = false;
  bool connected = false;
  bool restrictions_block = false;

  bool ok() const {
    return parts_nonempty && size_at_least_parts && empty_trace_antichain &&
           full_trace_antichain && connected && restrictions_block;
  }
};

CriticalStructureReport check_critical_structure(const InducedSubposet& f, VertexMask y);

// Streams every critical y-blocker in Q(ground), ascending family bitmap.
// Visitor returns false to stop. Ground sets of up to 4 elements.
void for_each_critical_blocker(const GroundSet& ground, VertexMask y,
                               const std::function<bool(const InducedSubposet&)>& visit);

struct RedQnReport {
  bool has_red_copy = false;
  std::optional<VertexMask> x;          // the n-set whose good copy is all red
  std::optional<XGoodEmbedding> copy;
};

// A fully red copy of Q_n exists iff for some n-element X the blue vertices
// fail to block Z ∖ X; the witness copy is recovered from that failure.
RedQnReport coloring_has_red_qn(const Coloring& coloring, int n);

}  // namespace qblock
