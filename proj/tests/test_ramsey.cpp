#include <doctest.h>

#include <cstdint>
#include <vector>

#include "qblock/errors.hpp"
#include "qblock/morphisms.hpp"
#include "qblock/ramsey.hpp"
#include "qblock/spnfree.hpp"

using namespace qblock;

TEST_CASE("layered colorings paint the bottom popcount layers red") {
  const GroundSet g = GroundSet::numbered(2);

  const Coloring all_blue = layered_coloring(g, 0);
  CHECK(all_blue.red_count() == 0);
  CHECK(all_blue == Coloring::monochrome(g, false));

  const Coloring bottom = layered_coloring(g, 1);
  CHECK(bottom.red_count() == 1);
  CHECK(bottom.red(VertexMask::empty_set()));
  CHECK(bottom.blue(VertexMask(1u)));

  const Coloring two = layered_coloring(g, 2);
  CHECK(two.red_count() == 3);  // {}, {1}, {2}
  CHECK(two.blue(VertexMask(3u)));

  const Coloring all_red = layered_coloring(g, 3);
  CHECK(all_red.red_count() == 4);
  CHECK(all_red == Coloring::monochrome(g, true));

  CHECK_THROWS_AS(layered_coloring(g, -1), invalid_input);
  CHECK_THROWS_AS(layered_coloring(g, 4), invalid_input);
}

TEST_CASE("witness validation runs both explicit searches") {
  const GroundSet g = GroundSet::numbered(2);
  const AbstractPoset v = AbstractPoset::v_shape();

  // One red layer: the blue part is Q2 minus its bottom, which contains the
  // one-below-two shape ({1} under {1,2} ... needs two above one element).
  // Blue vertices {1},{2},{1,2}: {1}<{1,2}, {2}<{1,2} — that is the
  // two-below-one shape, not one-below-two.
  const Coloring one_layer = layered_coloring(g, 1);
  const WitnessCheck w1 = validate_witness(one_layer, v, 1);
  CHECK(w1.no_blue_pattern);  // blue part has no induced one-below-two copy
  CHECK(w1.no_red_cube);      // a single red vertex holds no good 1-cube copy
  CHECK(w1.valid());

  // All red: a red 1-cube exists.
  const WitnessCheck w2 = validate_witness(layered_coloring(g, 3), v, 1);
  CHECK_FALSE(w2.no_red_cube);
  CHECK(w2.no_blue_pattern);
  CHECK_FALSE(w2.valid());

  // All blue in Q2 contains the one-below-two shape.
  const WitnessCheck w3 = validate_witness(layered_coloring(g, 0), v, 1);
  CHECK_FALSE(w3.no_blue_pattern);
  CHECK(w3.no_red_cube);
}

TEST_CASE("decision outcomes at and below the threshold") {
  const AbstractPoset v = AbstractPoset::v_shape();

  // Dimension 2 is too small: some coloring avoids both targets.
  const DecisionResult low = ramsey_decision(v, 1, 2);
  CHECK_FALSE(low.holds);
  REQUIRE(low.counterexample.has_value());
  const WitnessCheck wc = validate_witness(*low.counterexample, v, 1);
  CHECK(wc.valid());

  // Dimension 3 forces one of the two targets into every coloring.
  const DecisionResult high = ramsey_decision(v, 1, 3);
  CHECK(high.holds);
  CHECK_FALSE(high.counterexample.has_value());
  CHECK(high.colorings_checked == (1ll << 8));
}

TEST_CASE("equal pattern and cube dimensions still force a witness check") {
  // Pattern = 1-cube as a poset (a 2-chain), target cube dimension 1, host Q1:
  // the all-red coloring has a red 1-cube, all-blue has a blue chain, and the
  // mixed colorings admit neither... checking the decision settles it.
  const DecisionResult d = ramsey_decision(AbstractPoset::chain(2), 1, 1);
  CHECK_FALSE(d.holds);
  REQUIRE(d.counterexample.has_value());
  CHECK(d.counterexample->red_count() == 1);  // least bitmap: only {} red
}

TEST_CASE("worker counts and symmetry reduction preserve the result") {
  const AbstractPoset n_poset = AbstractPoset::n_shape();

  const DecisionResult base = ramsey_decision(n_poset, 1, 3);
  for (RamseyOptions opt : {RamseyOptions{4, false}, RamseyOptions{1, true},
                            RamseyOptions{4, true}}) {
    const DecisionResult r = ramsey_decision(n_poset, 1, 3, opt);
    CHECK(r.holds == base.holds);
  }

  // On a failing instance every mode reports the same least counterexample.
  const DecisionResult fail_base = ramsey_decision(n_poset, 1, 2);
  REQUIRE_FALSE(fail_base.holds);
  REQUIRE(fail_base.counterexample.has_value());
  for (RamseyOptions opt : {RamseyOptions{4, false}, RamseyOptions{1, true},
                            RamseyOptions{4, true}}) {
    const DecisionResult r = ramsey_decision(n_poset, 1, 2, opt);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->red_vertices() == fail_base.counterexample->red_vertices());
  }

  // Symmetry reduction skips non-canonical colorings but never misses a class.
  const DecisionResult sym = ramsey_decision(n_poset, 1, 3, RamseyOptions{1, true});
  CHECK(sym.colorings_checked < base.colorings_checked);
}

TEST_CASE("decision input validation") {
  CHECK_THROWS_AS(ramsey_decision(AbstractPoset::from_leq({}, {}), 1, 2), invalid_input);
  CHECK_THROWS_AS(ramsey_decision(AbstractPoset::single(), -1, 2), invalid_input);
  CHECK_THROWS_AS(ramsey_decision(AbstractPoset::single(), 3, 2), invalid_input);
  CHECK_THROWS_AS(ramsey_decision(AbstractPoset::single(), 1, 5), capacity_error);
}

TEST_CASE("threshold scan pins the exact small values") {
  // Chains against growing cubes: value n+1.
  for (int n = 1; n <= 3; ++n) {
    const RamseyResult r = ramsey_number(AbstractPoset::chain(2), n, 4);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == n + 1);
    CHECK(r.bracket_low <= *r.value);
    if (r.bracket_high) CHECK(*r.value <= *r.bracket_high);
    CHECK(static_cast<int>(r.witnesses.size()) == *r.value);  // dimensions 0..value−1
    for (const auto& [dim, coloring] : r.witnesses) {
      CHECK(validate_witness(coloring, AbstractPoset::chain(2), n).valid());
      CHECK(coloring.ground().size() == dim);
    }
    CHECK(r.monotone_rechecked == (*r.value + 1 <= 4));
  }

  const RamseyResult rv = ramsey_number(AbstractPoset::v_shape(), 1, 4);
  REQUIRE(rv.value.has_value());
  CHECK(*rv.value == 3);

  const RamseyResult rl = ramsey_number(AbstractPoset::lambda_shape(), 1, 4);
  REQUIRE(rl.value.has_value());
  CHECK(*rl.value == 3);

  const RamseyResult rn = ramsey_number(AbstractPoset::n_shape(), 1, 4);
  REQUIRE(rn.value.has_value());
  CHECK(*rn.value == 4);
  CHECK(rn.bracket_low == 2);  // n + height − 1
  REQUIRE(rn.bracket_high.has_value());
  CHECK(*rn.bracket_high >= 4);
}

TEST_CASE("scan reports unknown above the cap") {
  // The 2-chain against a 4-cube needs dimension 5, beyond the cap.
  const RamseyResult r = ramsey_number(AbstractPoset::chain(2), 4, 4);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.witnesses.size() == 5);  // dimensions 0..4 all carry counterexamples
  for (const auto& [dim, coloring] : r.witnesses) {
    CHECK(validate_witness(coloring, AbstractPoset::chain(2), 4).valid());
  }
}

TEST_CASE("blocker-existence thresholds for the small shapes") {
  const MpnResult single = compute_mpn(AbstractPoset::single(), 1, 4);
  REQUIRE(single.value.has_value());
  CHECK(*single.value == 2);
  CHECK(single.scan_start == 2);

  const MpnResult chain = compute_mpn(AbstractPoset::chain(2), 1, 4);
  REQUIRE(chain.value.has_value());
  CHECK(*chain.value == 2);

  const MpnResult v = compute_mpn(AbstractPoset::v_shape(), 1, 4);
  REQUIRE(v.value.has_value());
  CHECK(*v.value == 3);

  const MpnResult lam = compute_mpn(AbstractPoset::lambda_shape(), 1, 4);
  REQUIRE(lam.value.has_value());
  CHECK(*lam.value == 3);

  const MpnResult n_res = compute_mpn(AbstractPoset::n_shape(), 1, 4);
  REQUIRE(n_res.value.has_value());
  CHECK(*n_res.value == 4);

  // Each witness below the threshold is a pattern-free blocker, re-checkable
  // from the outside.
  for (const auto& [dim, f] : n_res.witnesses) {
    const VertexMask target = f.ground().all() - VertexMask((1u << 1) - 1);
    CHECK(is_blocker(f, target).blocker);
    CHECK_FALSE(has_induced_copy(AbstractPoset::n_shape(), f.vertices()));
  }
}

TEST_CASE("blocker-existence scan reports unknown above the cap") {
  const MpnResult r = compute_mpn(AbstractPoset::n_shape(), 3, 3);
  // Scan covers only N = 4? scan_start = n+1 = 4 > n_max = 3: nothing settled.
  CHECK(r.scan_start == 4);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.witnesses.empty());

  // A single-element blocked set always admits a chain-shaped blocker, which
  // is free of the one-below-two pattern, so dimension 3 yields a witness and
  // no value within this cap.
  const MpnResult r2 = compute_mpn(AbstractPoset::v_shape(), 2, 3);
  CHECK_FALSE(r2.value.has_value());
  REQUIRE(r2.witnesses.size() == 1);
  CHECK(r2.witnesses[0].first == 3);
}

TEST_CASE("blocker-existence input validation") {
  CHECK_THROWS_AS(compute_mpn(AbstractPoset::single(), -1, 3), invalid_input);
  CHECK_THROWS_AS(compute_mpn(AbstractPoset::single(), 1, 5), capacity_error);
  CHECK_THROWS_AS(compute_mpn(AbstractPoset::from_leq({}, {}), 1, 3), invalid_input);
}

TEST_CASE("coloring thresholds never exceed blocker-existence thresholds") {
  for (const AbstractPoset& p :
       {AbstractPoset::v_shape(), AbstractPoset::lambda_shape(), AbstractPoset::n_shape()}) {
    const RamseyResult r = ramsey_number(p, 1, 4);
    const MpnResult m = compute_mpn(p, 1, 4);
    REQUIRE(r.value.has_value());
    REQUIRE(m.value.has_value());
    CHECK(*r.value <= *m.value);
  }
}
