#include "qblock/blockers.hpp"

#include <algorithm>
#include <deque>

#include "qblock/errors.hpp"

namespace qblock {

namespace {

// Avoiding map read off a disjoint copy: each member's image is the trace
// of the copy vertex sitting over the member's own trace on x.
SetMap map_from_disjoint_copy(const InducedSubposet& f, const XGoodEmbedding& psi, VertexMask x,
                              VertexMask y) {
  SetMap m{y, {}};
  m.image.reserve(f.size());
  for (VertexMask v : f.vertices()) m.image.push_back(psi.map(v & x) & y);
  if (!is_weak_homomorphism(f, m) || !is_avoiding(f, m)) {
    throw invariant_violation("duality", "map derived from a disjoint copy is not avoiding");
  }
  return m;
}

}  // namespace

BlockerCertificate is_blocker(const InducedSubposet& f, VertexMask y, BlockerStrategy strategy) {
  if (y.empty()) {
    throw invalid_input("blocked set must be nonempty");
  }
  if (!y.subset_of(f.ground().all())) {
    throw invalid_input("blocked set is not within the ground set");
  }
  const VertexMask x = f.ground().all() - y;
  BlockerCertificate cert;
  cert.strategy = strategy;

  if (strategy == BlockerStrategy::kHomomorphism) {
    HomSearchStats stats;
    auto phi = find_avoiding_homomorphism(f, y, &stats);
    cert.work = stats.nodes;
    cert.blocker = !phi.has_value();
    if (phi.has_value()) {
      cert.avoiding_map = std::move(phi);
      cert.disjoint_copy = construct_avoiding_embedding(f, *cert.avoiding_map, x, y);
    }
    return cert;
  }

  long long copies = 0;
  std::optional<XGoodEmbedding> disjoint;
  for_each_x_good_copy(f.ground(), x, y, [&](const XGoodEmbedding& psi) {
    ++copies;
    for (VertexMask v : psi.image()) {
      if (f.contains(v)) return true;  // copy is met; keep looking
    }
    disjoint = psi;
    return false;
  });
  cert.work = copies;
  cert.blocker = !disjoint.has_value();
  if (disjoint.has_value()) {
    cert.avoiding_map = map_from_disjoint_copy(f, *disjoint, x, y);
    cert.disjoint_copy = std::move(disjoint);
  }
  return cert;
}

BlockerCache::BlockerCache(GroundSet ground, VertexMask y)
    : ground_(std::move(ground)), y_(y) {
  if (ground_.size() > 5) {
    throw capacity_error("verdict cache supports ground sets of at most 5 elements");
  }
  if (y_.empty()) {
    throw invalid_input("blocked set must be nonempty");
  }
  if (!y_.subset_of(ground_.all())) {
    throw invalid_input("blocked set is not within the ground set");
  }
}

uint32_t BlockerCache::bitmap_of(const InducedSubposet& f) const {
  if (!(f.ground() == ground_)) {
    throw invalid_input("family belongs to a different ground set");
  }
  uint32_t bm = 0;
  for (VertexMask v : f.vertices()) bm |= 1u << v.bits();
  return bm;
}

InducedSubposet BlockerCache::family_of(uint32_t bitmap) const {
  const uint32_t space = 1u << (1u << ground_.size());
  if (ground_.size() < 5 && bitmap >= space) {
    throw invalid_input("family bitmap has bits outside the lattice");
  }
  std::vector<VertexMask> vs;
  for (uint32_t v = 0; v < (1u << ground_.size()); ++v) {
    if ((bitmap >> v) & 1u) vs.emplace_back(v);
  }
  return InducedSubposet(ground_, std::move(vs));
}

bool BlockerCache::is_blocker_bitmap(uint32_t bitmap) {
  ++lookups_;
  auto it = memo_.find(bitmap);
  if (it != memo_.end()) return it->second;
  ++computed_;
  const bool verdict = !find_avoiding_homomorphism(family_of(bitmap), y_).has_value();
  memo_.emplace(bitmap, verdict);
  return verdict;
}

bool BlockerCache::is_blocker(const InducedSubposet& f) { return is_blocker_bitmap(bitmap_of(f)); }

namespace {

bool blocks(const InducedSubposet& f, VertexMask y, BlockerCache* cache) {
  if (cache != nullptr) {
    if (!(cache->ground() == f.ground()) || !(cache->y() == y)) {
      throw invalid_input("cache was built for a different lattice or blocked set");
    }
    return cache->is_blocker(f);
  }
  return !find_avoiding_homomorphism(f, y).has_value();
}

}  // namespace

bool is_critical_blocker(const InducedSubposet& f, VertexMask y, BlockerCache* cache) {
  if (!blocks(f, y, cache)) return false;
  for (VertexMask v : f.vertices()) {
    if (blocks(f.without(v), y, cache)) return false;
  }
  return true;
}

InducedSubposet criticalize(const InducedSubposet& f, VertexMask y, BlockerCache* cache) {
  if (!blocks(f, y, cache)) {
    throw invalid_input("family does not block the given set");
  }
  InducedSubposet cur = f;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexMask v : cur.vertices()) {
      InducedSubposet cand = cur.without(v);
      if (blocks(cand, y, cache)) {
        cur = std::move(cand);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

InducedSubposet restrict_blocker(const InducedSubposet& f, VertexMask y, int element,
                                 bool containing) {
  if (element < 0 || element >= kMaxGroundSize || !y.test(element)) {
    throw invalid_input("restriction element must belong to the blocked set");
  }
  return f.filter([&](VertexMask v) { return v.test(element) == containing; });
}

CriticalStructureReport check_critical_structure(const InducedSubposet& f, VertexMask y) {
  if (y.empty()) {
    throw invalid_input("blocked set must be nonempty");
  }
  if (!y.subset_of(f.ground().all())) {
    throw invalid_input("blocked set is not within the ground set");
  }
  CriticalStructureReport r;
  const auto traces = submasks_of(y);

  std::vector<std::vector<VertexMask>> classes(traces.size());
  for (VertexMask v : f.vertices()) {
    const VertexMask t = v & y;
    const auto it = std::lower_bound(traces.begin(), traces.end(), t, canonical_less);
    classes[static_cast<size_t>(it - traces.begin())].push_back(v);
  }

  r.parts_nonempty = std::all_of(classes.begin(), classes.end(),
                                 [](const auto& c) { return !c.empty(); });
  r.size_at_least_parts = static_cast<size_t>(f.size()) >= traces.size();

  auto antichain = [](const std::vector<VertexMask>& c) {
    for (size_t i = 0; i < c.size(); ++i) {
      for (size_t j = 0; j < c.size(); ++j) {
        if (i != j && c[i].subset_of(c[j])) return false;
      }
    }
    return true;
  };
  r.empty_trace_antichain = antichain(classes.front());
  r.full_trace_antichain = antichain(classes.back());

  // Connectivity of the comparability graph, by breadth-first search.
  const auto& vs = f.vertices();
  if (vs.empty()) {
    r.connected = false;
  } else {
    std::vector<char> seen(vs.size(), 0);
    std::deque<size_t> queue{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
      const size_t i = queue.front();
      queue.pop_front();
      for (size_t j = 0; j < vs.size(); ++j) {
        if (!seen[j] && vs[i].comparable_with(vs[j])) {
          seen[j] = 1;
          ++reached;
          queue.push_back(j);
        }
      }
    }
    r.connected = reached == vs.size();
  }

  r.restrictions_block = true;
  for (int a : y.elements()) {
    const VertexMask rest = y.without(a);
    for (bool containing : {true, false}) {
      const auto sub = restrict_blocker(f, y, a, containing);
      // With an empty remaining target the only good copy is the identity,
      // which every vertex meets: blocking ⇔ nonempty.
      const bool blocks = rest.empty() ? !sub.empty()
                                       : !find_avoiding_homomorphism(sub, rest).has_value();
      if (!blocks) r.restrictions_block = false;
    }
  }
  return r;
}

void for_each_critical_blocker(const GroundSet& ground, VertexMask y,
                               const std::function<bool(const InducedSubposet&)>& visit) {
  if (ground.size() > 4) {
    throw capacity_error("critical-blocker enumeration supports ground sets of at most 4 elements");
  }
  BlockerCache cache(ground, y);
  const uint32_t vertices = 1u << ground.size();
  const uint64_t families = 1ull << vertices;
  for (uint64_t bm = 1; bm < families; ++bm) {
    const uint32_t b = static_cast<uint32_t>(bm);
    if (!cache.is_blocker_bitmap(b)) continue;
    bool critical = true;
    for (uint32_t v = 0; v < vertices && critical; ++v) {
      if ((b >> v) & 1u) {
        if (cache.is_blocker_bitmap(b & ~(1u << v))) critical = false;
      }
    }
    if (critical && !visit(cache.family_of(b))) return;
  }
}

RedQnReport coloring_has_red_qn(const Coloring& coloring, int n) {
  const GroundSet& g = coloring.ground();
  if (n < 0) throw invalid_input("cube dimension must be nonnegative");
  RedQnReport report;
  if (n > g.size()) return report;

  const InducedSubposet blue(g, coloring.blue_vertices());
  const uint32_t all = g.all().bits();
  for (uint32_t xm = 0;; xm = (xm - all) & all) {
    if (std::popcount(xm) == n) {
      const VertexMask x{xm};
      const VertexMask y = g.all() - x;
      if (y.empty()) {
        // X is the whole ground set: the identity is the only X-good copy.
        if (blue.empty()) {
          report.has_red_copy = true;
          report.x = x;
          report.copy = XGoodEmbedding(g, x, submasks_of(x));
          return report;
        }
      } else {
        auto phi = find_avoiding_homomorphism(blue, y);
        if (phi.has_value()) {
          report.has_red_copy = true;
          report.x = x;
          report.copy = construct_avoiding_embedding(blue, *phi, x, y);
          return report;
        }
      }
    }
    if (xm == all) break;
  }
  return report;
}

}  // namespace qblock
