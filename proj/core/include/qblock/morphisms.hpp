#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qblock/lattice.hpp"

namespace qblock {

// Vertex-indexed assignment into Q(y): image[i] is the value taken by the
// i-th canonical vertex of the domain subposet.
struct SetMap {
  VertexMask y;
  std::vector<VertexMask> image;

  friend bool operator==(const SetMap&, const SetMap&) = default;
};

// Order-preserving into Q(y) (weak morphism: A ⊆ B forces image ⊆ image).
bool is_weak_homomorphism(const InducedSubposet& domain, const SetMap& m);
// No vertex F is sent to exactly F ∩ y.
bool is_avoiding(const InducedSubposet& domain, const SetMap& m);

// Injective order-isomorphism of a pattern onto host vertices.
struct PatternEmbedding {
  std::vector<VertexMask> image;  // indexed by pattern element

  friend bool operator==(const PatternEmbedding&, const PatternEmbedding&) = default;
};

bool embedding_is_induced(const AbstractPoset& pattern, const PatternEmbedding& e);

// First induced copy in the canonical search order, or nullopt.
std::optional<PatternEmbedding> find_induced_copy(const AbstractPoset& pattern,
                                                  const InducedSubposet& host);
// Same search on a raw canonical vertex list (hot path).
bool has_induced_copy(const AbstractPoset& pattern, const std::vector<VertexMask>& host);
// Restricted search: only copies whose image uses `pinned`.
bool has_induced_copy_through(const AbstractPoset& pattern, const std::vector<VertexMask>& host,
                              VertexMask pinned);
// Induced-copy search with an abstract host poset.
bool has_induced_copy(const AbstractPoset& pattern, const AbstractPoset& host);
// Order-isomorphism: equal sizes plus an induced copy in either direction.
bool poset_isomorphic(const AbstractPoset& a, const AbstractPoset& b);

// A copy of Q(x) inside Q(ground) whose trace on x is the identity:
// map(X') ∩ x = X' for every X' ⊆ x. image is indexed by the canonical rank
// of X' among the subsets of x.
class XGoodEmbedding {
 public:
  XGoodEmbedding(GroundSet ground, VertexMask x, std::vector<VertexMask> image);

  const GroundSet& ground() const { return ground_; }
  VertexMask x() const { return x_; }
  const std::vector<VertexMask>& arguments() const { return args_; }  // subsets of x
  const std::vector<VertexMask>& image() const { return image_; }
  VertexMask map(VertexMask x_subset) const;
  InducedSubposet image_subposet() const;

  friend bool operator==(const XGoodEmbedding&, const XGoodEmbedding&) = default;

 private:
  GroundSet ground_;
  VertexMask x_;
  std::vector<VertexMask> args_, image_;
};

// Checks both directions: X1 ⊆ X2 ⇔ image(X1) ⊆ image(X2), plus the trace
// identity map(X') ∩ x = X'.
bool is_strong_x_good(const XGoodEmbedding& e);

// The X (|X| = log2 |copy|) for which the copy is an X-good copy of Q(X);
// nullopt when the vertex set is not a copy of a Boolean lattice.
// invalid_input when |copy| is not a power of two.
std::optional<VertexMask> defining_set(const InducedSubposet& copy);

struct HomSearchStats {
  long long nodes = 0;
};

// Backtracking search for an order-preserving map f -> Q(y) avoiding every
// trace value F ∩ y, for nonempty y. Vertices are processed in canonical
// order (a linear extension); candidate values ascend, so the first solution
// is canonical. nullopt means the search exhausted: every homomorphism hits
// some trace.
std::optional<SetMap> find_avoiding_homomorphism(const InducedSubposet& f, VertexMask y,
                                                 HomSearchStats* stats = nullptr);

// Builds from an avoiding homomorphism an X-good copy disjoint from f by
// fixed-point iteration, and verifies the result (strong, X-good, disjoint).
// x and y must partition the ground set of f.
XGoodEmbedding construct_avoiding_embedding(const InducedSubposet& f, const SetMap& phi,
                                            VertexMask x, VertexMask y);

// Streams every X-good copy of Q(x) into Q(x ∪ y) exactly once, ordered by
// the canonical enumeration of their monotone y-traces. Visitor returns
// false to stop early. capacity_error when |y|·2^|x| > 24.
void for_each_x_good_copy(const GroundSet& ground, VertexMask x, VertexMask y,
                          const std::function<bool(const XGoodEmbedding&)>& visit);
std::vector<XGoodEmbedding> enumerate_x_good_copies(const GroundSet& ground, VertexMask x,
                                                    VertexMask y);

// Smallest m ≤ cap such that Q([m]) contains an induced copy of p, verified
// on both sides (copy at m, none below). nullopt when above the cap.
std::optional<int> two_dimension(const AbstractPoset& p, int cap);

}  // namespace qblock
