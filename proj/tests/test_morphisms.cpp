#include <doctest.h>

#include "qblock/errors.hpp"
#include "qblock/morphisms.hpp"

using namespace qblock;

namespace {

InducedSubposet family3(std::initializer_list<uint32_t> masks) {
  std::vector<VertexMask> vs;
  for (uint32_t m : masks) vs.emplace_back(m);
  return InducedSubposet(GroundSet::numbered(3), std::move(vs));
}

}  // namespace

TEST_CASE("weak homomorphism and avoidance predicates") {
  const InducedSubposet f = family3({0b000, 0b001, 0b011});
  const VertexMask y = VertexMask::of({0});
  SetMap constant{y, {VertexMask{}, VertexMask{}, VertexMask{}}};
  CHECK(is_weak_homomorphism(f, constant));
  CHECK(!is_avoiding(f, constant));  // hits the trace of the bottom vertex
  SetMap flipped{y, {VertexMask::of({0}), VertexMask{}, VertexMask{}}};
  CHECK(!is_weak_homomorphism(f, flipped));  // not order-preserving
  SetMap avoid{y, {VertexMask::of({0}), VertexMask::of({0}), VertexMask{}}};
  CHECK(!is_weak_homomorphism(f, avoid));
  SetMap wrong_size{y, {VertexMask{}}};
  CHECK_THROWS_AS((void)is_weak_homomorphism(f, wrong_size), invalid_input);
}

TEST_CASE("the four-element zigzag embeds into the 3-cube at the documented spot") {
  const AbstractPoset pattern = AbstractPoset::n_shape();
  const InducedSubposet host = boolean_lattice(GroundSet::numbered(3));
  const auto copy = find_induced_copy(pattern, host);
  REQUIRE(copy.has_value());
  // A={1}, B={2}, C={1,2}, D={2,3}: the first copy in canonical search order.
  CHECK(copy->image == std::vector<VertexMask>{VertexMask::of({0}), VertexMask::of({1}),
                                               VertexMask::of({0, 1}), VertexMask::of({1, 2})});
  CHECK(embedding_is_induced(pattern, *copy));
}

TEST_CASE("induced copies demand incomparability as well as order") {
  const AbstractPoset v = AbstractPoset::v_shape();
  // A chain has no induced copy of the fork even though it maps monotonically.
  CHECK(!has_induced_copy(v, std::vector<VertexMask>{VertexMask{0}, VertexMask{1},
                                                     VertexMask{3}}));
  CHECK(has_induced_copy(v, std::vector<VertexMask>{VertexMask{0}, VertexMask{1},
                                                    VertexMask{2}}));
}

TEST_CASE("pinned copy search only reports copies through the pinned vertex") {
  const AbstractPoset v = AbstractPoset::v_shape();
  const std::vector<VertexMask> host{VertexMask{0}, VertexMask{1}, VertexMask{2}, VertexMask{4}};
  CHECK(has_induced_copy_through(v, host, VertexMask{4}));
  const std::vector<VertexMask> chain{VertexMask{0}, VertexMask{1}, VertexMask{3}};
  CHECK(!has_induced_copy_through(v, chain, VertexMask{3}));
}

TEST_CASE("abstract-host copy search and isomorphism") {
  CHECK(has_induced_copy(AbstractPoset::v_shape(), AbstractPoset::boolean(2)));
  CHECK(!has_induced_copy(AbstractPoset::n_shape(), AbstractPoset::boolean(2)));
  CHECK(poset_isomorphic(AbstractPoset::boolean(1), AbstractPoset::chain(2)));
  CHECK(!poset_isomorphic(AbstractPoset::v_shape(), AbstractPoset::lambda_shape()));
  CHECK(!poset_isomorphic(AbstractPoset::chain(2), AbstractPoset::chain(3)));
}

TEST_CASE("x-good embeddings expose trace-identity maps") {
  GroundSet g = GroundSet::numbered(3);
  const VertexMask x = VertexMask::of({0});
  // arguments {} and {1}; images pick up ground element 2 monotonically
  XGoodEmbedding e(g, x, {VertexMask::of({1}), VertexMask::of({0, 1})});
  CHECK(is_strong_x_good(e));
  CHECK(e.map(VertexMask{}) == VertexMask::of({1}));
  CHECK(e.map(x) == VertexMask::of({0, 1}));
  CHECK(e.image_subposet().size() == 2);
  // breaking the trace identity is detected
  XGoodEmbedding bad(g, x, {VertexMask::of({0, 1}), VertexMask::of({0, 1})});
  CHECK(!is_strong_x_good(bad));
}

TEST_CASE("defining set recovers X from a good copy") {
  GroundSet g = GroundSet::numbered(3);
  const VertexMask x = VertexMask::of({0, 1});
  const std::vector<VertexMask> image{VertexMask{}, VertexMask::of({0}), VertexMask::of({1}),
                                      VertexMask::of({0, 1, 2})};
  const auto found = defining_set(InducedSubposet(g, image));
  REQUIRE(found.has_value());
  CHECK(*found == x);
  // a single vertex is a 0-dimensional copy
  CHECK(defining_set(InducedSubposet(g, {VertexMask::of({2})})) == VertexMask{});
  // three vertices cannot be a full Boolean lattice
  CHECK_THROWS_AS(
      (void)defining_set(InducedSubposet(g, {VertexMask{0}, VertexMask{1}, VertexMask{3}})),
      invalid_input);
  // a chain of 2 with the wrong shape is not a cube copy
  CHECK(!defining_set(InducedSubposet(g, {VertexMask{1}, VertexMask{3}, VertexMask{5},
                                          VertexMask{2}}))
             .has_value());
}

TEST_CASE("avoiding homomorphism search matches the blocker examples") {
  // Family {∅} over ground 3 with y = {1}: the bottom vertex must map to a
  // nonempty trace, which {1} provides.
  const InducedSubposet single = family3({0b000});
  const auto phi = find_avoiding_homomorphism(single, VertexMask::of({0}));
  REQUIRE(phi.has_value());
  CHECK(phi->image == std::vector<VertexMask>{VertexMask::of({0})});
  CHECK(is_weak_homomorphism(single, *phi));
  CHECK(is_avoiding(single, *phi));
  CHECK_THROWS_AS((void)find_avoiding_homomorphism(single, VertexMask{}), invalid_input);
}

TEST_CASE("search statistics count visited candidates") {
  HomSearchStats stats;
  (void)find_avoiding_homomorphism(family3({0b000, 0b111}), VertexMask::of({0}), &stats);
  CHECK(stats.nodes > 0);
}

TEST_CASE("constructed embedding is the least fixed point over each argument") {
  // f = {{1}} over ground {1,2,3}, y = {1}, x = {2,3}. φ must send {1} to ∅.
  const InducedSubposet f = family3({0b001});
  const VertexMask y = VertexMask::of({0});
  const VertexMask x = VertexMask::of({1, 2});
  const auto phi = find_avoiding_homomorphism(f, y);
  REQUIRE(phi.has_value());
  const XGoodEmbedding e = construct_avoiding_embedding(f, *phi, x, y);
  CHECK(is_strong_x_good(e));
  for (VertexMask v : e.image()) CHECK(!f.contains(v));
  // no member of f lies inside x ∪ acc for any argument here, so the copy is
  // internal to Q(x)
  CHECK(e.map(VertexMask{}) == VertexMask{});
  CHECK(e.map(x) == x);
}

TEST_CASE("x-good copy enumeration covers all monotone trace choices") {
  GroundSet g = GroundSet::numbered(2);
  // |x| = 1, |y| = 1: monotone maps from a 2-chain into a 2-chain: 3 of them
  const auto copies = enumerate_x_good_copies(g, VertexMask::of({0}), VertexMask::of({1}));
  CHECK(copies.size() == 3);
  for (const auto& c : copies) CHECK(is_strong_x_good(c));
  // |x| = 0, |y| = 2: one single-vertex copy per subset of y
  const auto points = enumerate_x_good_copies(g, VertexMask{}, VertexMask::of({0, 1}));
  CHECK(points.size() == 4);
  CHECK_THROWS_AS(enumerate_x_good_copies(GroundSet::numbered(6), VertexMask::of({0, 1, 2, 3}),
                                          VertexMask::of({4, 5})),
                  capacity_error);
}

TEST_CASE("two-dimension values for the stock shapes") {
  CHECK(two_dimension(AbstractPoset::single(), 8) == 0);
  CHECK(two_dimension(AbstractPoset::chain(2), 8) == 1);
  CHECK(two_dimension(AbstractPoset::v_shape(), 8) == 2);
  CHECK(two_dimension(AbstractPoset::lambda_shape(), 8) == 2);
  CHECK(two_dimension(AbstractPoset::n_shape(), 8) == 3);
  CHECK(two_dimension(AbstractPoset::boolean(2), 8) == 2);
  // a 6-element antichain needs dimension 4 (C(4,2) = 6 ≥ 6)
  CHECK(two_dimension(AbstractPoset::antichain(6), 8) == 4);
  CHECK(!two_dimension(AbstractPoset::antichain(40), 4).has_value());
}
