#include "qblock/selfcheck.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "qblock/blockers.hpp"
#include "qblock/errors.hpp"
#include "qblock/family.hpp"
#include "qblock/generators.hpp"
#include "qblock/ramsey.hpp"
#include "qblock/spnfree.hpp"

namespace qblock {

namespace {

InducedSubposet family_from_bitmap(const GroundSet& ground, uint32_t bitmap) {
  std::vector<VertexMask> vs;
  const uint32_t total = 1u << ground.size();
  for (uint32_t v = 0; v < total; ++v) {
    if ((bitmap >> v) & 1u) vs.emplace_back(v);
  }
  return InducedSubposet(ground, std::move(vs));
}

std::vector<VertexMask> nonempty_targets(const GroundSet& ground, int max_size) {
  std::vector<VertexMask> out;
  for (VertexMask y : submasks_of(ground.all())) {
    if (!y.empty() && y.count() <= max_size) out.push_back(y);
  }
  return out;
}

// Critical blockers over Q([N]) for N ≤ 4 and every target of size ≤ 2,
// computed once per process: the image of the greedy reduction over every
// blocking family (which, since critical families are its fixed points, is
// exactly the set of critical blockers).
struct CriticalCorpusEntry {
  GroundSet ground;
  VertexMask y;
  std::vector<uint32_t> critical_bitmaps;  // ascending
  long long blockers_seen = 0;
};

const std::vector<CriticalCorpusEntry>& critical_blocker_corpus() {
  static const std::vector<CriticalCorpusEntry> corpus = [] {
    std::vector<CriticalCorpusEntry> out;
    for (int n = 1; n <= 4; ++n) {
      GroundSet ground = GroundSet::numbered(n);
      for (VertexMask y : nonempty_targets(ground, 2)) {
        BlockerCache cache(ground, y);
        std::set<uint32_t> criticals;
        long long blockers = 0;
        const uint64_t families = 1ull << (1u << n);
        for (uint64_t bitmap = 1; bitmap < families; ++bitmap) {
          const auto bm = static_cast<uint32_t>(bitmap);
          if (!cache.is_blocker_bitmap(bm)) continue;
          ++blockers;
          criticals.insert(
              cache.bitmap_of(criticalize(cache.family_of(bm), y, &cache)));
        }
        out.push_back({ground, y,
                       std::vector<uint32_t>(criticals.begin(), criticals.end()), blockers});
      }
    }
    return out;
  }();
  return corpus;
}

uint64_t pow3(int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

CheckOutcome outcome(const std::string& name, bool passed, const std::string& detail) {
  return CheckOutcome{name, passed, detail};
}

}  // namespace

CheckOutcome check_duality_agreement() {
  GroundSet ground = GroundSet::numbered(3);
  long long pairs = 0, disagreements = 0;
  for (VertexMask y : nonempty_targets(ground, 3)) {
    for (uint32_t bitmap = 0; bitmap < 256; ++bitmap) {
      const InducedSubposet f = family_from_bitmap(ground, bitmap);
      const bool by_hom = is_blocker(f, y, BlockerStrategy::kHomomorphism).blocker;
      const bool by_enum = is_blocker(f, y, BlockerStrategy::kEnumeration).blocker;
      ++pairs;
      if (by_hom != by_enum) ++disagreements;
    }
  }
  std::ostringstream d;
  d << pairs << " family/target pairs, " << disagreements << " strategy disagreements";
  return outcome("duality_agreement", disagreements == 0, d.str());
}

CheckOutcome check_worked_examples() {
  GroundSet ground({"1", "2", "x1", "x2"});
  const VertexMask y = ground.mask_of({"1", "2"});
  const InducedSubposet shift(ground, {VertexMask{4}, VertexMask{5}, VertexMask{6}, VertexMask{7}});
  const InducedSubposet five(ground,
                             {VertexMask{0}, VertexMask{5}, VertexMask{7}, VertexMask{10},
                              VertexMask{11}});
  int certified = 0;
  for (const InducedSubposet* f : {&shift, &five}) {
    const bool hom = is_blocker(*f, y, BlockerStrategy::kHomomorphism).blocker;
    const bool en = is_blocker(*f, y, BlockerStrategy::kEnumeration).blocker;
    if (hom && en) ++certified;
  }
  std::ostringstream d;
  d << certified << " of 2 reference families certified as {1,2}-blockers by both strategies";
  return outcome("worked_examples", certified == 2, d.str());
}

CheckOutcome check_constructive_converse() {
  GroundSet ground = GroundSet::numbered(3);
  long long non_blockers = 0, failures = 0;
  for (VertexMask y : nonempty_targets(ground, 3)) {
    const VertexMask x = ground.all() - y;
    for (uint32_t bitmap = 0; bitmap < 256; ++bitmap) {
      const InducedSubposet f = family_from_bitmap(ground, bitmap);
      const auto phi = find_avoiding_homomorphism(f, y);
      if (!phi.has_value()) continue;
      ++non_blockers;
      bool ok = true;
      try {
        const XGoodEmbedding e = construct_avoiding_embedding(f, *phi, x, y);
        if (!is_strong_x_good(e)) ok = false;
        if (e.arguments().size() != (size_t{1} << x.count())) ok = false;
        for (size_t i = 0; i < e.arguments().size() && ok; ++i) {
          if (!e.arguments()[i].subset_of(x)) ok = false;
          if (f.contains(e.image()[i])) ok = false;
        }
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok) ++failures;
    }
  }
  std::ostringstream d;
  d << non_blockers << " non-blockers, " << failures << " embedding failures";
  return outcome("constructive_converse", failures == 0, d.str());
}

CheckOutcome check_critical_structure_suite() {
  long long checked = 0, structure_failures = 0;
  long long census_mismatches = 0, shape_failures = 0;
  for (const CriticalCorpusEntry& entry : critical_blocker_corpus()) {
    BlockerCache cache(entry.ground, entry.y);
    for (uint32_t bm : entry.critical_bitmaps) {
      const InducedSubposet f = cache.family_of(bm);
      ++checked;
      if (!check_critical_structure(f, entry.y).ok()) ++structure_failures;
      if (entry.y.count() == 1) {
        // Exactly two members: one below the target, one through it.
        const auto& vs = f.vertices();
        const bool two_chain = vs.size() == 2 && (vs[0] & entry.y).empty() &&
                               entry.y.subset_of(vs[1]) &&
                               vs[0].subset_of(vs[1] - entry.y);
        if (!two_chain) ++shape_failures;
      }
    }
    // Independent enumeration must reproduce the greedy-reduction image.
    std::vector<uint32_t> direct;
    for_each_critical_blocker(entry.ground, entry.y, [&](const InducedSubposet& f) {
      direct.push_back(cache.bitmap_of(f));
      return true;
    });
    if (direct != entry.critical_bitmaps) ++census_mismatches;
    if (entry.y.count() == 1 &&
        entry.critical_bitmaps.size() != pow3(entry.ground.size() - 1)) {
      ++census_mismatches;
    }
  }
  std::ostringstream d;
  d << checked << " critical blockers, " << structure_failures << " structure failures, "
    << shape_failures << " two-chain shape failures, " << census_mismatches
    << " census mismatches";
  return outcome("critical_structure_suite",
                 structure_failures == 0 && shape_failures == 0 && census_mismatches == 0,
                 d.str());
}

CheckOutcome check_decomposition_equivalence(uint64_t seed) {
  long long exhaustive = 0, random_count = 0, disagreements = 0, evaluation_failures = 0;
  auto examine = [&](const AbstractPoset& p) {
    const bool free_of_pattern = is_n_free(p);
    const auto tree = sp_decompose(p);
    if (free_of_pattern != tree.has_value()) ++disagreements;
    if (tree.has_value() && !poset_isomorphic(evaluate_sp_tree(*tree, p), p)) {
      ++evaluation_failures;
    }
  };
  for (int n = 1; n <= 5; ++n) {
    for (const AbstractPoset& p : all_posets_up_to_iso(n)) {
      ++exhaustive;
      examine(p);
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 10000; ++i) {
    ++random_count;
    examine(random_poset(6 + i % 3, rng));
  }
  std::ostringstream d;
  d << exhaustive << " exhaustive + " << random_count << " random posets, " << disagreements
    << " disagreements, " << evaluation_failures << " re-evaluation failures";
  return outcome("decomposition_equivalence",
                 disagreements == 0 && evaluation_failures == 0, d.str());
}

CheckOutcome check_root_family_suite() {
  long long eligible = 0, root_failures = 0, family_failures = 0, antichain_failures = 0;
  long long reverse_containment_holds = 0, families_built = 0;
  for (const CriticalCorpusEntry& entry : critical_blocker_corpus()) {
    BlockerCache cache(entry.ground, entry.y);
    for (uint32_t bm : entry.critical_bitmaps) {
      const InducedSubposet f = cache.family_of(bm);
      if (!is_n_free(f)) continue;
      ++eligible;
      try {
        (void)find_root(f, entry.y);
      } catch (const std::exception&) {
        ++root_failures;
        continue;
      }
      for (RootPreference pref : {RootPreference::kPreferMin, RootPreference::kPreferMax}) {
        try {
          const BlockerFamily family = build_family(f, entry.y, pref);
          ++families_built;
          const FamilyCheckReport report = verify_family(family);
          if (!report.ok()) ++family_failures;
          if (report.parent_within_child) ++reverse_containment_holds;
          const AntichainExtraction ae = extract_antichain(family);
          bool ok = ae.max_intersection_class <= 2 && !ae.antichain.empty();
          for (size_t i = 0; i < ae.antichain.size() && ok; ++i) {
            for (size_t j = i + 1; j < ae.antichain.size() && ok; ++j) {
              if (ae.antichain[i].comparable_with(ae.antichain[j])) ok = false;
            }
          }
          if (!ok) ++antichain_failures;
        } catch (const std::exception&) {
          ++family_failures;
        }
      }
    }
  }
  std::ostringstream d;
  d << eligible << " pattern-free critical blockers, " << families_built << " families built, "
    << root_failures << " root failures, " << family_failures << " construction failures, "
    << antichain_failures << " antichain failures; reverse containment held in "
    << reverse_containment_holds << " of " << families_built << " families";
  return outcome("root_family_suite",
                 root_failures == 0 && family_failures == 0 && antichain_failures == 0,
                 d.str());
}

namespace {

bool ramsey_case(const AbstractPoset& pattern, int n, int expected, std::ostringstream& d,
                 const char* label) {
  const RamseyResult r = ramsey_number(pattern, n, 4);
  const bool value_ok = r.value.has_value() && *r.value == expected;
  const bool bracket_ok = r.value.has_value() && *r.value >= r.bracket_low &&
                          (!r.bracket_high.has_value() || *r.value <= *r.bracket_high);
  d << label << "=" << (r.value.has_value() ? std::to_string(*r.value) : "unknown")
    << (value_ok ? "" : "(expected " + std::to_string(expected) + ")")
    << (bracket_ok ? "" : "[outside bracket]") << " ";
  return value_ok && bracket_ok;
}

}  // namespace

CheckOutcome check_ramsey_exact_values() {
  std::ostringstream d;
  bool ok = true;
  const AbstractPoset two_chain = AbstractPoset::chain(2);
  ok &= ramsey_case(two_chain, 1, 2, d, "chain2/n1");
  ok &= ramsey_case(two_chain, 2, 3, d, "chain2/n2");
  ok &= ramsey_case(two_chain, 3, 4, d, "chain2/n3");
  ok &= ramsey_case(AbstractPoset::v_shape(), 1, 3, d, "fork-up/n1");
  ok &= ramsey_case(AbstractPoset::lambda_shape(), 1, 3, d, "fork-down/n1");
  ok &= ramsey_case(AbstractPoset::n_shape(), 1, 4, d, "zigzag4/n1");
  return outcome("ramsey_exact_values", ok, d.str());
}

CheckOutcome check_blocker_ramsey_inequality() {
  std::ostringstream d;
  bool ok = true;
  const std::pair<const char*, AbstractPoset> cases[] = {
      {"fork-up", AbstractPoset::v_shape()},
      {"fork-down", AbstractPoset::lambda_shape()},
      {"zigzag4", AbstractPoset::n_shape()},
  };
  for (const auto& [label, pattern] : cases) {
    const RamseyResult r = ramsey_number(pattern, 1, 4);
    const MpnResult m = compute_mpn(pattern, 1, 4);
    const bool both = r.value.has_value() && m.value.has_value();
    const bool holds = both && *r.value <= *m.value;
    d << label << ": coloring threshold "
      << (r.value.has_value() ? std::to_string(*r.value) : "unknown") << " vs blocker threshold "
      << (m.value.has_value() ? std::to_string(*m.value) : "unknown")
      << (holds ? " ok; " : " VIOLATED; ");
    ok &= holds;
  }
  return outcome("blocker_ramsey_inequality", ok, d.str());
}

CheckOutcome check_sperner_arithmetic() {
  // Central binomials C(m, ⌊m/2⌋), ascending, until past 10^6.
  std::vector<uint64_t> centrals{1};
  for (int m = 1; centrals.back() <= 2000000; ++m) {
    centrals.push_back(centrals.back() * m / ((m + 1) / 2));
  }
  long long mismatches = 0, log_failures = 0;
  size_t m = 0;
  for (uint64_t t = 1; t <= 1000000; ++t) {
    while (centrals[m] < t) ++m;
    const int alpha = sperner_number(t);
    if (alpha != static_cast<int>(m)) ++mismatches;
    if (alpha < 63 && (uint64_t{1} << alpha) < t) ++log_failures;
  }
  const bool spots = sperner_number(1) == 0 && sperner_number(2) == 2 && sperner_number(7) == 5;
  std::ostringstream d;
  d << "10^6 values, " << mismatches << " binomial mismatches, " << log_failures
    << " log-bound failures, spot values " << (spots ? "ok" : "WRONG");
  return outcome("sperner_arithmetic", mismatches == 0 && log_failures == 0 && spots, d.str());
}

std::vector<CheckOutcome> run_all_checks(uint64_t seed) {
  return {
      check_duality_agreement(),
      check_worked_examples(),
      check_constructive_converse(),
      check_critical_structure_suite(),
      check_decomposition_equivalence(seed),
      check_root_family_suite(),
      check_ramsey_exact_values(),
      check_blocker_ramsey_inequality(),
      check_sperner_arithmetic(),
  };
}

}  // namespace qblock
