#include <doctest.h>

#include "qblock/blockers.hpp"
#include "qblock/errors.hpp"

using namespace qblock;

namespace {

GroundSet ground4() { return GroundSet({"1", "2", "x1", "x2"}); }

InducedSubposet make(const GroundSet& g, std::initializer_list<uint32_t> masks) {
  std::vector<VertexMask> vs;
  for (uint32_t m : masks) vs.emplace_back(m);
  return InducedSubposet(g, std::move(vs));
}

}  // namespace

TEST_CASE("the shifted square and the five-vertex family block {1,2}") {
  const GroundSet g = ground4();
  const VertexMask y = g.mask_of({"1", "2"});
  const InducedSubposet shift = make(g, {4, 5, 6, 7});
  const InducedSubposet five = make(g, {0, 5, 7, 10, 11});
  for (const auto strategy : {BlockerStrategy::kHomomorphism, BlockerStrategy::kEnumeration}) {
    const auto a = is_blocker(shift, y, strategy);
    CHECK(a.blocker);
    CHECK(!a.avoiding_map.has_value());
    const auto b = is_blocker(five, y, strategy);
    CHECK(b.blocker);
    CHECK(b.work > 0);
  }
}

TEST_CASE("negative certificates carry both witness forms") {
  const GroundSet g = ground4();
  const VertexMask y = g.mask_of({"1", "2"});
  const InducedSubposet weak = make(g, {0, 5});
  for (const auto strategy : {BlockerStrategy::kHomomorphism, BlockerStrategy::kEnumeration}) {
    const auto cert = is_blocker(weak, y, strategy);
    CHECK(!cert.blocker);
    REQUIRE(cert.avoiding_map.has_value());
    REQUIRE(cert.disjoint_copy.has_value());
    CHECK(is_weak_homomorphism(weak, *cert.avoiding_map));
    CHECK(is_avoiding(weak, *cert.avoiding_map));
    CHECK(is_strong_x_good(*cert.disjoint_copy));
    for (VertexMask v : cert.disjoint_copy->image()) CHECK(!weak.contains(v));
  }
}

TEST_CASE("empty blocked sets are rejected") {
  const GroundSet g = ground4();
  const InducedSubposet f = make(g, {0, 5});
  CHECK_THROWS_AS((void)is_blocker(f, VertexMask{}), invalid_input);
  CHECK_THROWS_AS(BlockerCache(g, VertexMask{}), invalid_input);
  CHECK_THROWS_AS((void)check_critical_structure(f, VertexMask{}), invalid_input);
}

TEST_CASE("greedy reduction reaches the frozen cores") {
  const GroundSet g = ground4();
  const VertexMask y = g.mask_of({"1", "2"});
  const InducedSubposet five = make(g, {0, 5, 7, 10, 11});
  CHECK(criticalize(five, y) == five);
  CHECK(is_critical_blocker(five, y));
  const InducedSubposet with_top = make(g, {0, 5, 7, 10, 11, 15});
  CHECK(!is_critical_blocker(with_top, y));
  CHECK(criticalize(with_top, y) == make(g, {0, 5, 10, 15}));
  CHECK_THROWS_AS((void)criticalize(make(g, {0}), y), invalid_input);

  const GroundSet g2 = GroundSet::numbered(2);
  const VertexMask y1 = g2.mask_of({"1"});
  CHECK(criticalize(boolean_lattice(g2), y1) ==
        InducedSubposet(g2, {VertexMask{2}, VertexMask{3}}));
}

TEST_CASE("the cache memoizes verdicts by family bitmap") {
  const GroundSet g = GroundSet::numbered(2);
  const VertexMask y = g.mask_of({"1"});
  BlockerCache cache(g, y);
  const InducedSubposet full = boolean_lattice(g);
  const uint32_t bm = cache.bitmap_of(full);
  CHECK(cache.family_of(bm) == full);
  CHECK(cache.is_blocker_bitmap(bm));
  const auto computed_once = cache.computed();
  CHECK(cache.is_blocker_bitmap(bm));
  CHECK(cache.computed() == computed_once);
  CHECK(cache.lookups() == 2);
  CHECK_THROWS_AS(BlockerCache(GroundSet::numbered(6), VertexMask::of({0})), capacity_error);
}

TEST_CASE("restrictions keep or drop one blocked element") {
  const GroundSet g = ground4();
  const VertexMask y = g.mask_of({"1", "2"});
  const InducedSubposet five = make(g, {0, 5, 7, 10, 11});
  // {1,2,x2} contains "1", so it survives the keep side and leaves the drop side.
  CHECK(restrict_blocker(five, y, 0, true) == make(g, {5, 7, 11}));
  CHECK(restrict_blocker(five, y, 0, false) == make(g, {0, 10}));
  CHECK_THROWS_AS((void)restrict_blocker(five, y, 2, true), invalid_input);
}

TEST_CASE("critical structure report on the five-vertex core") {
  const GroundSet g = ground4();
  const VertexMask y = g.mask_of({"1", "2"});
  const auto r = check_critical_structure(make(g, {0, 5, 7, 10, 11}), y);
  CHECK(r.parts_nonempty);
  CHECK(r.size_at_least_parts);
  CHECK(r.empty_trace_antichain);
  CHECK(r.full_trace_antichain);
  CHECK(r.connected);
  CHECK(r.restrictions_block);
  CHECK(r.ok());
}

TEST_CASE("critical blockers of a single element form two-chains") {
  const GroundSet g = GroundSet::numbered(3);
  const VertexMask y = g.mask_of({"3"});
  int count = 0;
  for_each_critical_blocker(g, y, [&](const InducedSubposet& f) {
    ++count;
    REQUIRE(f.size() == 2);
    const auto& vs = f.vertices();
    CHECK((vs[0] & y).empty());
    CHECK(y.subset_of(vs[1]));
    CHECK(vs[0].subset_of(vs[1] - y));
    CHECK(check_critical_structure(f, y).ok());
    return true;
  });
  CHECK(count == 9);  // 3^(N-1) with N = 3
}

TEST_CASE("red cube detection in colorings") {
  const GroundSet g = GroundSet::numbered(2);
  SUBCASE("an all-red lattice contains a red square") {
    const auto r = coloring_has_red_qn(Coloring::monochrome(g, true), 2);
    CHECK(r.has_red_copy);
    REQUIRE(r.x.has_value());
    CHECK(*r.x == g.all());
  }
  SUBCASE("one blue vertex kills the only full-dimension copy") {
    std::vector<bool> red(4, true);
    red[1] = false;
    CHECK(!coloring_has_red_qn(Coloring(g, red), 2).has_red_copy);
    // but a red 1-cube survives, e.g. along the other coordinate
    const auto r = coloring_has_red_qn(Coloring(g, red), 1);
    CHECK(r.has_red_copy);
    REQUIRE(r.copy.has_value());
    for (VertexMask v : r.copy->image()) CHECK(v != VertexMask{1});
  }
  SUBCASE("a red 0-cube is a single red vertex") {
    std::vector<bool> red(4, false);
    red[3] = true;
    const auto r = coloring_has_red_qn(Coloring(g, red), 0);
    CHECK(r.has_red_copy);
  }
  SUBCASE("an all-blue lattice has no red copy of any dimension") {
    for (int n = 0; n <= 2; ++n) {
      CHECK(!coloring_has_red_qn(Coloring::monochrome(g, false), n).has_red_copy);
    }
  }
}
