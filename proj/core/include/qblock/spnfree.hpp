#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qblock/lattice.hpp"
#include "qblock/morphisms.hpp"

namespace qblock {

// Binary series-parallel decomposition tree. Leaves carry element indices of
// the source poset; a series node puts everything in `left` below everything
// in `right`; a parallel node relates nothing across the split.
struct SPTree {
  enum class Kind { kLeaf, kSeries, kParallel };

  Kind kind = Kind::kLeaf;
  int element = -1;  // leaf payload
  std::unique_ptr<SPTree> left, right;

  static SPTree leaf(int element);
  static SPTree series(SPTree below, SPTree above);
  static SPTree parallel(SPTree first, SPTree second);

  SPTree clone() const;
};

// Rebuilds a poset from the tree via the composition operations, using the
// source poset's element names. Isomorphic to the decomposed poset.
AbstractPoset evaluate_sp_tree(const SPTree& tree, const AbstractPoset& source);

// Recursive split: components of the comparability graph give a parallel
// split; otherwise the bottom incomparability-component, which sits below
// everything else, gives a series split. nullopt when neither applies at
// some node, i.e. the poset is not series-parallel. invalid_input on an
// empty poset.
std::optional<SPTree> sp_decompose(const AbstractPoset& p);

// No induced copy of the four-element pattern {A<C, B<C, B<D}.
bool is_n_free(const AbstractPoset& p);
bool is_n_free(const InducedSubposet& f);

enum class RootType { kMin, kMax };
enum class RootPreference { kPreferMin, kPreferMax };

struct Root {
  VertexMask vertex;
  RootType type = RootType::kMin;
  bool min_available = false;
  bool max_available = false;
};

// The root of a critical blocker with no induced four-element N pattern:
// its minimum or maximum vertex. Preconditions (blocking, criticality,
// N-freeness) are verified and fail as invalid_input; a family passing them
// but having neither extreme contradicts the root theorem and aborts with
// invariant_violation. With both extremes present the preference decides;
// the verified trace laws are min ⇒ root∩y = ∅ and max ⇒ root∩y = y.
Root find_root(const InducedSubposet& f, VertexMask y,
               RootPreference pref = RootPreference::kPreferMin);

}  // namespace qblock
