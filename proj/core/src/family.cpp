#include "qblock/family.hpp"

#include <algorithm>

#include "qblock/errors.hpp"

namespace qblock {

OrderedSubset::OrderedSubset(std::vector<int> seq) : seq_(std::move(seq)) {
  VertexMask seen = VertexMask::empty_set();
  for (int e : seq_) {
    if (e < 0 || e >= kMaxGroundSize) throw invalid_input("sequence element out of range");
    if (seen.test(e)) throw invalid_input("sequence elements must be distinct");
    seen = seen.with(e);
  }
}

int OrderedSubset::at(int i) const {
  if (i < 0 || i >= size()) throw invalid_input("sequence index out of range");
  return seq_[static_cast<size_t>(i)];
}

OrderedSubset OrderedSubset::prefix(int len) const {
  if (len < 0 || len > size()) throw invalid_input("prefix length out of range");
  return OrderedSubset(std::vector<int>(seq_.begin(), seq_.begin() + len));
}

OrderedSubset OrderedSubset::extended(int element) const {
  std::vector<int> s = seq_;
  s.push_back(element);
  return OrderedSubset(std::move(s));
}

VertexMask OrderedSubset::underlying() const {
  VertexMask m = VertexMask::empty_set();
  for (int e : seq_) m = m.with(e);
  return m;
}

BlockerFamily::BlockerFamily(GroundSet ground, VertexMask y)
    : ground_(std::move(ground)), y_(y) {
  if (y_.empty()) throw invalid_input("blocked set must be nonempty");
  if (!y_.subset_of(ground_.all())) {
    throw invalid_input("blocked set is not within the ground set");
  }
}

bool BlockerFamily::has(const OrderedSubset& s) const { return entries_.count(s.seq()) != 0; }

const FamilyEntry& BlockerFamily::at(const OrderedSubset& s) const {
  auto it = entries_.find(s.seq());
  if (it == entries_.end()) throw invalid_input("no entry for the given sequence");
  return it->second;
}

void BlockerFamily::insert(FamilyEntry entry) {
  if (!entry.s.underlying().subset_of(y_)) {
    throw invalid_input("sequence uses elements outside the blocked set");
  }
  auto key = entry.s.seq();
  if (!entries_.emplace(std::move(key), std::move(entry)).second) {
    throw invalid_input("duplicate entry for the given sequence");
  }
}

namespace {

void check_trace_law(const FamilyEntry& e, VertexMask y) {
  if (e.type == RootType::kMin) {
    if (!((e.z_s & y) == e.a_s)) {
      throw invariant_violation("root-trace-law",
                                "minimum root's y-trace differs from the kept elements");
    }
  } else {
    if (!((y - (e.z_s & y)) == e.b_s)) {
      throw invariant_violation("root-trace-law",
                                "maximum root's missing y-part differs from the dropped elements");
    }
  }
}

}  // namespace

BlockerFamily build_family(const InducedSubposet& f, VertexMask y, RootPreference pref) {
  const int k = y.count();
  if (k < 1) throw invalid_input("blocked set must be nonempty");
  if (!y.subset_of(f.ground().all())) {
    throw invalid_input("blocked set is not within the ground set");
  }
  if (k > 5) {
    throw capacity_error("family construction supports blocked sets of at most 5 elements");
  }

  BlockerFamily fam(f.ground(), y);

  // find_root validates blocking, criticality, and N-freeness.
  const Root r0 = find_root(f, y, pref);
  FamilyEntry root_entry{OrderedSubset{}, f, r0.vertex, VertexMask::empty_set(),
                         VertexMask::empty_set(), r0.type};
  check_trace_law(root_entry, y);
  fam.insert(root_entry);

  std::vector<OrderedSubset> frontier{OrderedSubset{}};
  for (int sz = 0; sz < k - 1; ++sz) {
    std::vector<OrderedSubset> next;
    for (const OrderedSubset& s : frontier) {
      const FamilyEntry parent = fam.at(s);
      const VertexMask y_parent = y - s.underlying();
      for (int a : y.elements()) {
        if (s.underlying().test(a)) continue;
        const OrderedSubset sc = s.extended(a);
        const VertexMask y_child = y - sc.underlying();
        const bool keep_containing = parent.type == RootType::kMin;

        InducedSubposet restricted =
            restrict_blocker(parent.f_s, y_parent, a, keep_containing);
        if (find_avoiding_homomorphism(restricted, y_child).has_value()) {
          throw invariant_violation(
              "restriction-blocker",
              "restriction of a critical blocker fails to block the reduced set");
        }
        InducedSubposet child = criticalize(restricted, y_child);

        Root r;
        if (sc.size() == k - 1) {
          const RootPreference forced = parent.type == RootType::kMin
                                            ? RootPreference::kPreferMin
                                            : RootPreference::kPreferMax;
          r = find_root(child, y_child, forced);
          if (r.type != parent.type) {
            throw invariant_violation("final-root-type",
                                      "required root type is unavailable at the last level");
          }
        } else {
          r = find_root(child, y_child, pref);
        }

        FamilyEntry entry{sc, std::move(child), r.vertex,
                          keep_containing ? parent.a_s.with(a) : parent.a_s,
                          keep_containing ? parent.b_s : parent.b_s.with(a), r.type};
        check_trace_law(entry, y);
        fam.insert(std::move(entry));
        next.push_back(sc);
      }
    }
    frontier = std::move(next);
  }
  return fam;
}

FamilyCheckReport verify_family(const BlockerFamily& family) {
  FamilyCheckReport rep;
  const VertexMask y = family.y();
  const int k = family.k();

  for (const auto& [key, e] : family.entries()) {
    const VertexMask y_s = y - e.s.underlying();
    if (!is_critical_blocker(e.f_s, y_s)) rep.entries_valid = false;
    if (!is_n_free(e.f_s)) rep.entries_valid = false;
    if (!((e.a_s | e.b_s) == e.s.underlying()) || !(e.a_s & e.b_s).empty()) {
      rep.entries_valid = false;
    }
    if (e.type == RootType::kMin) {
      if (!((e.z_s & y) == e.a_s)) rep.entries_valid = false;
    } else {
      if (!((y - (e.z_s & y)) == e.b_s)) rep.entries_valid = false;
    }

    // Prefix relations.
    int min_prefixes = 0;
    for (int len = 0; len < e.s.size(); ++len) {
      const FamilyEntry& anc = family.at(e.s.prefix(len));
      if (anc.type == RootType::kMin) ++min_prefixes;
      for (VertexMask v : e.f_s.vertices()) {
        if (!anc.f_s.contains(v)) rep.child_within_parent = false;
      }
      for (VertexMask v : anc.f_s.vertices()) {
        if (!e.f_s.contains(v)) rep.parent_within_child = false;
      }
      const VertexMask under = anc.s.underlying();
      if (!((e.a_s & under) == anc.a_s) || !((e.b_s & under) == anc.b_s)) {
        rep.trace_partition = false;
      }
    }
    if (e.a_s.count() != min_prefixes) rep.min_prefix_count = false;

    if (e.s.size() == k - 1) {
      for (int len = 0; len < e.s.size(); ++len) {
        const VertexMask rest = y - e.s.prefix(len).underlying();
        const VertexMask t = e.z_s & rest;
        if (t.empty() || t == rest) rep.final_level_traces = false;
      }
    }
  }
  return rep;
}

PairClassification classify_pair(const OrderedSubset& s1, const OrderedSubset& s2,
                                 const BlockerFamily& family) {
  if (s1.size() != s2.size() || s1.size() != family.k() - 1) {
    throw invalid_input("both sequences must have size one below the blocked-set size");
  }
  PairClassification c{true, true};
  for (int len = 0; len <= s1.size(); ++len) {
    const FamilyEntry& e1 = family.at(s1.prefix(len));
    const FamilyEntry& e2 = family.at(s2.prefix(len));
    if (e1.type != e2.type) c.type_equivalent = false;
    if (!((e1.z_s & family.y()) == (e2.z_s & family.y()))) c.intersection_equivalent = false;
  }
  return c;
}

AntichainExtraction extract_antichain(const BlockerFamily& family) {
  const int k = family.k();

  // All size-(k−1) sequences in lexicographic order.
  std::vector<OrderedSubset> level;
  for (const auto& [key, e] : family.entries()) {
    if (e.s.size() == k - 1) level.push_back(e.s);
  }
  if (level.empty()) throw invalid_input("family has no entries at the final level");

  // Group by the root-type signature over all prefix sizes.
  std::map<std::vector<int>, std::vector<OrderedSubset>> type_classes;
  for (const OrderedSubset& s : level) {
    std::vector<int> sig;
    for (int len = 0; len <= s.size(); ++len) {
      sig.push_back(family.at(s.prefix(len)).type == RootType::kMin ? 0 : 1);
    }
    type_classes[sig].push_back(s);
  }
  const std::vector<OrderedSubset>* best = nullptr;
  for (const auto& [sig, members] : type_classes) {
    if (best == nullptr || members.size() > best->size() ||
        (members.size() == best->size() && members.front().seq() < best->front().seq())) {
      best = &members;
    }
  }

  // Within the winning class, group by the root-trace signature; the proof
  // bounds each group by two members; keep each group's first sequence.
  std::map<std::vector<uint32_t>, std::vector<OrderedSubset>> trace_classes;
  for (const OrderedSubset& s : *best) {
    std::vector<uint32_t> sig;
    for (int len = 0; len <= s.size(); ++len) {
      sig.push_back((family.at(s.prefix(len)).z_s & family.y()).bits());
    }
    trace_classes[sig].push_back(s);
  }

  AntichainExtraction out;
  out.type_class_size = best->size();
  std::vector<OrderedSubset> reps;
  for (const auto& [sig, members] : trace_classes) {
    out.max_intersection_class = std::max(out.max_intersection_class, members.size());
    if (members.size() > 2) {
      throw invariant_violation("trace-class-bound",
                                "a root-trace class has more than two members");
    }
    reps.push_back(members.front());
  }
  std::sort(reps.begin(), reps.end(),
            [](const OrderedSubset& a, const OrderedSubset& b) { return a.seq() < b.seq(); });
  out.selected = std::move(reps);
  for (const OrderedSubset& s : out.selected) out.antichain.push_back(family.at(s).z_s);

  for (size_t i = 0; i < out.antichain.size(); ++i) {
    for (size_t j = 0; j < out.antichain.size(); ++j) {
      if (i != j && out.antichain[i].subset_of(out.antichain[j])) {
        throw invariant_violation("antichain-output",
                                  "extracted roots contain a comparable pair");
      }
    }
  }
  return out;
}

int sperner_number(uint64_t t) {
  if (t == 0) throw invalid_input("target must be positive");
  if (t > (1ull << 62)) throw capacity_error("target exceeds the supported range");
  uint64_t central = 1;  // C(0,0)
  int m = 0;
  while (central < t) {
    ++m;
    const unsigned __int128 next = static_cast<unsigned __int128>(central) * m;
    central = static_cast<uint64_t>(next / ((m + 1) / 2));
  }
  return m;
}

}  // namespace qblock
