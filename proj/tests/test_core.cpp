#include <doctest.h>

#include <algorithm>

#include "qblock/abstract_poset.hpp"
#include "qblock/errors.hpp"
#include "qblock/ground.hpp"
#include "qblock/lattice.hpp"
#include "qblock/mask.hpp"

using namespace qblock;

TEST_CASE("vertex mask set operations") {
  const VertexMask a = VertexMask::of({0, 2});
  const VertexMask b = VertexMask::of({0, 1, 2});
  CHECK(a.count() == 2);
  CHECK(a.subset_of(b));
  CHECK(a.proper_subset_of(b));
  CHECK(!b.subset_of(a));
  CHECK(a.comparable_with(b));
  CHECK(!VertexMask::of({1}).comparable_with(a));
  CHECK((a | b) == b);
  CHECK((a & b) == a);
  CHECK((b - a) == VertexMask::of({1}));
  CHECK(a.with(1) == b);
  CHECK(b.without(1) == a);
  CHECK(a.test(2));
  CHECK(!a.test(1));
  CHECK(a.elements() == std::vector<int>{0, 2});
  CHECK(VertexMask().empty());
}

TEST_CASE("canonical order ascends by size then value and extends inclusion") {
  const auto subs = submasks_of(VertexMask::of({0, 1, 2}));
  REQUIRE(subs.size() == 8);
  CHECK(subs.front() == VertexMask());
  CHECK(subs.back() == VertexMask::of({0, 1, 2}));
  CHECK(std::is_sorted(subs.begin(), subs.end(), canonical_less));
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = 0; j < subs.size(); ++j) {
      if (subs[i].proper_subset_of(subs[j])) CHECK(i < j);
    }
  }
}

TEST_CASE("ground set labels and masks") {
  GroundSet g({"1", "2", "x1", "x2"});
  CHECK(g.size() == 4);
  CHECK(g.index_of("x1") == 2);
  CHECK(g.mask_of({"1", "x2"}) == VertexMask::of({0, 3}));
  CHECK(g.names_of(VertexMask::of({0, 3})) == std::vector<std::string>{"1", "x2"});
  CHECK(g.set_string(VertexMask::of({0, 3})) == "{1,x2}");
  CHECK(g.set_string(VertexMask()) == "{}");
  CHECK(g.all() == VertexMask::of({0, 1, 2, 3}));
  CHECK_THROWS_AS((void)g.index_of("zz"), invalid_input);
  CHECK_THROWS_AS(GroundSet({"a", "a"}), invalid_input);
  CHECK(GroundSet::numbered(3).labels() == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("poset construction checks the order axioms") {
  CHECK_THROWS_AS(AbstractPoset::from_covers({"a", "b"}, {{0, 1}, {1, 0}}), invalid_input);
  CHECK_THROWS_AS(AbstractPoset::from_covers({"a"}, {{0, 0}}), invalid_input);
  CHECK_THROWS_AS(AbstractPoset::from_covers({"a"}, {{0, 1}}), invalid_input);
  // missing transitivity in a raw relation matrix
  CHECK_THROWS_AS(AbstractPoset::from_leq({"a", "b", "c"}, {0b011, 0b110, 0b100}),
                  invalid_input);
  const AbstractPoset p = AbstractPoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));  // closure
  CHECK(p.less(0, 2));
  CHECK(!p.less(0, 0));
  CHECK(p.comparable(0, 2));
}

TEST_CASE("cover pairs are the transitive reduction") {
  const AbstractPoset p = AbstractPoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  const auto covers = p.cover_pairs();
  CHECK(covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("stock shapes") {
  CHECK(height(AbstractPoset::single()) == 1);
  CHECK(height(AbstractPoset::chain(4)) == 4);
  CHECK(height(AbstractPoset::antichain(5)) == 1);
  CHECK(height(AbstractPoset::v_shape()) == 2);
  CHECK(height(AbstractPoset::lambda_shape()) == 2);
  CHECK(height(AbstractPoset::n_shape()) == 2);
  CHECK(height(AbstractPoset::boolean(3)) == 4);
  CHECK(AbstractPoset::boolean(2).size() == 4);
  CHECK(height(AbstractPoset::from_leq({}, {})) == 0);
}

TEST_CASE("linear extension is order-compatible") {
  const AbstractPoset p = AbstractPoset::n_shape();
  const auto ext = p.linear_extension();
  REQUIRE(ext.size() == 4);
  for (size_t i = 0; i < ext.size(); ++i) {
    for (size_t j = i + 1; j < ext.size(); ++j) {
      CHECK(!p.less(ext[j], ext[i]));
    }
  }
}

TEST_CASE("series and parallel composition") {
  const AbstractPoset two = AbstractPoset::antichain(2);
  const AbstractPoset s = series_composition(AbstractPoset::single(), two);
  CHECK(s.size() == 3);
  CHECK(s.less(0, 1));
  CHECK(s.less(0, 2));
  CHECK(!s.comparable(1, 2));
  const AbstractPoset par = parallel_composition(AbstractPoset::single(), AbstractPoset::single());
  CHECK(par.size() == 2);
  CHECK(!par.comparable(0, 1));
}

TEST_CASE("induced subposet keeps canonical distinct vertices") {
  GroundSet g = GroundSet::numbered(2);
  InducedSubposet f(g, {VertexMask{3}, VertexMask{1}, VertexMask{0}});
  CHECK(f.size() == 3);
  CHECK(f.vertices() == std::vector<VertexMask>{VertexMask{0}, VertexMask{1}, VertexMask{3}});
  CHECK(f.contains(VertexMask{1}));
  CHECK(f.index_of(VertexMask{3}) == 2);
  CHECK(f.index_of(VertexMask{2}) == -1);
  CHECK(f.without(VertexMask{1}).size() == 2);
  CHECK(f.filter([](VertexMask v) { return v.count() > 0; }).size() == 2);
  CHECK_THROWS_AS(InducedSubposet(g, {VertexMask{4}}), invalid_input);
  CHECK_THROWS_AS(InducedSubposet(g, {VertexMask{3}, VertexMask{3}}), invalid_input);
}

TEST_CASE("abstract view of a family preserves the inclusion order") {
  GroundSet g = GroundSet::numbered(2);
  const AbstractPoset p = boolean_lattice(g).as_abstract();
  CHECK(p.size() == 4);
  CHECK(p.elements()[0] == "{}");
  CHECK(p.leq(0, 3));
  CHECK(!p.comparable(1, 2));
}

TEST_CASE("colorings index by raw mask and split by side") {
  GroundSet g = GroundSet::numbered(2);
  Coloring c(g, {true, false, true, false});
  CHECK(c.red(VertexMask{0}));
  CHECK(c.blue(VertexMask{1}));
  CHECK(c.red_count() == 2);
  CHECK(c.red_vertices() == std::vector<VertexMask>{VertexMask{0}, VertexMask{2}});
  CHECK(c.blue_vertices() == std::vector<VertexMask>{VertexMask{1}, VertexMask{3}});
  CHECK(Coloring::monochrome(g, true).red_count() == 4);
  CHECK_THROWS_AS(Coloring(g, {true}), invalid_input);
}

TEST_CASE("lattice materialization respects the ground cap") {
  CHECK(boolean_lattice(GroundSet::numbered(4)).size() == 16);
  CHECK_THROWS_AS(boolean_lattice(GroundSet::numbered(21)), capacity_error);
}
