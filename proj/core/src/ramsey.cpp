#include "qblock/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "qblock/errors.hpp"
#include "qblock/morphisms.hpp"

namespace qblock {

Coloring layered_coloring(const GroundSet& ground, int red_layer_count) {
  if (red_layer_count < 0 || red_layer_count > ground.size() + 1) {
    throw invalid_input("red layer count must be between 0 and the layer count");
  }
  const size_t total = 1ull << ground.size();
  std::vector<bool> red(total, false);
  for (size_t v = 0; v < total; ++v) {
    red[v] = std::popcount(static_cast<uint32_t>(v)) < red_layer_count;
  }
  return Coloring(ground, std::move(red));
}

WitnessCheck validate_witness(const Coloring& coloring, const AbstractPoset& pattern, int n) {
  WitnessCheck w;
  w.no_blue_pattern = !has_induced_copy(pattern, coloring.blue_vertices());
  w.no_red_cube = !coloring_has_red_qn(coloring, n).has_red_copy;
  return w;
}

namespace {

// Shared, read-only context for one decision scan.
struct DecisionContext {
  const AbstractPoset& pattern;
  GroundSet ground;
  std::vector<uint32_t> canonical_raw;  // raw vertex values in canonical order
  std::vector<uint32_t> x_masks;        // candidate n-sets, ascending
  uint32_t all = 0;
  uint32_t vertex_count = 0;
  std::vector<std::vector<uint8_t>> vertex_perms;  // for symmetry reduction

  // True when the coloring (bit v = red) shows neither a blue pattern copy
  // nor an all-red good n-cube copy.
  bool avoids_both(uint64_t bitmap) const {
    std::vector<VertexMask> blue;
    blue.reserve(vertex_count);
    for (uint32_t v : canonical_raw) {
      if (((bitmap >> v) & 1ull) == 0) blue.emplace_back(v);
    }
    if (has_induced_copy(pattern, blue)) return false;
    const InducedSubposet blue_poset(ground, blue);
    for (uint32_t xm : x_masks) {
      if (xm == all) {
        if (blue.empty()) return false;  // the identity copy is all red
        continue;
      }
      if (find_avoiding_homomorphism(blue_poset, VertexMask{all & ~xm}).has_value()) {
        return false;  // some good copy misses every blue vertex
      }
    }
    return true;
  }

  bool is_orbit_representative(uint64_t bitmap) const {
    for (const auto& perm : vertex_perms) {
      uint64_t mapped = 0;
      for (uint32_t v = 0; v < vertex_count; ++v) {
        if ((bitmap >> v) & 1ull) mapped |= 1ull << perm[v];
      }
      if (mapped < bitmap) return false;
    }
    return true;
  }
};

DecisionContext make_context(const AbstractPoset& pattern, int n, int cube_size,
                             bool symmetry) {
  DecisionContext ctx{pattern, GroundSet::numbered(cube_size), {}, {}, 0, 0, {}};
  ctx.all = ctx.ground.all().bits();
  ctx.vertex_count = 1u << cube_size;
  for (VertexMask v : submasks_of(ctx.ground.all())) ctx.canonical_raw.push_back(v.bits());
  for (uint32_t xm = 0;; xm = (xm - ctx.all) & ctx.all) {
    if (std::popcount(xm) == n) ctx.x_masks.push_back(xm);
    if (xm == ctx.all) break;
  }
  if (symmetry) {
    std::vector<int> perm(static_cast<size_t>(cube_size));
    for (int i = 0; i < cube_size; ++i) perm[static_cast<size_t>(i)] = i;
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<uint8_t> vp(ctx.vertex_count);
      for (uint32_t v = 0; v < ctx.vertex_count; ++v) {
        uint32_t image = 0;
        for (int b = 0; b < cube_size; ++b) {
          if ((v >> b) & 1u) image |= 1u << perm[static_cast<size_t>(b)];
        }
        vp[v] = static_cast<uint8_t>(image);
      }
      ctx.vertex_perms.push_back(std::move(vp));
    }
  }
  return ctx;
}

}  // namespace

DecisionResult ramsey_decision(const AbstractPoset& pattern, int n, int cube_size,
                               const RamseyOptions& options) {
  if (pattern.size() == 0) throw invalid_input("pattern must be nonempty");
  if (n < 0 || cube_size < 0) throw invalid_input("dimensions must be nonnegative");
  if (n > cube_size) throw invalid_input("cube dimension exceeds the host dimension");
  if (cube_size > 4) {
    throw capacity_error("full coloring search supports host dimension at most 4");
  }

  const DecisionContext ctx = make_context(pattern, n, cube_size, options.symmetry);
  const uint64_t total = 1ull << ctx.vertex_count;

  int jobs = std::max(1, options.jobs);
  uint64_t slices = 1;
  while (slices < static_cast<uint64_t>(jobs) && slices < 256) slices <<= 1;

  std::atomic<uint64_t> best{UINT64_MAX};
  std::atomic<long long> checked{0};

  auto scan_slice = [&](uint64_t residue) {
    long long local = 0;
    for (uint64_t bitmap = residue; bitmap < total; bitmap += slices) {
      if (bitmap > best.load(std::memory_order_relaxed)) break;
      if (!ctx.vertex_perms.empty() && !ctx.is_orbit_representative(bitmap)) continue;
      ++local;
      if (ctx.avoids_both(bitmap)) {
        uint64_t prev = best.load(std::memory_order_relaxed);
        while (bitmap < prev &&
               !best.compare_exchange_weak(prev, bitmap, std::memory_order_relaxed)) {
        }
        break;
      }
    }
    checked.fetch_add(local, std::memory_order_relaxed);
  };

  if (slices == 1) {
    scan_slice(0);
  } else {
    std::vector<std::thread> workers;
    for (uint64_t r = 0; r < slices; ++r) workers.emplace_back(scan_slice, r);
    for (auto& w : workers) w.join();
  }

  DecisionResult result;
  result.colorings_checked = checked.load();
  const uint64_t found = best.load();
  result.holds = found == UINT64_MAX;
  if (!result.holds) {
    std::vector<bool> red(ctx.vertex_count, false);
    for (uint32_t v = 0; v < ctx.vertex_count; ++v) red[v] = (found >> v) & 1ull;
    result.counterexample = Coloring(ctx.ground, std::move(red));
  }
  return result;
}

RamseyResult ramsey_number(const AbstractPoset& pattern, int n, int n_max,
                           const RamseyOptions& options) {
  if (pattern.size() == 0) throw invalid_input("pattern must be nonempty");
  if (n < 0 || n_max < 0) throw invalid_input("dimensions must be nonnegative");

  RamseyResult result;
  result.n = n;
  const int h = height(pattern);
  result.bracket_low = n + h - 1;
  const auto dim2 = two_dimension(pattern, 8);
  if (dim2.has_value()) result.bracket_high = h * n + *dim2;

  // Below n+h−1 a layered coloring settles the dimension: with min(n, N+1)
  // red bottom layers there is no red chain of n+1 popcounts and the blue
  // remainder has height below the pattern's.
  for (int N = 0; N < result.bracket_low && N <= n_max; ++N) {
    Coloring witness = layered_coloring(GroundSet::numbered(N), std::min(n, N + 1));
    if (!validate_witness(witness, pattern, n).valid()) {
      throw invariant_violation("layered-witness",
                                "layered coloring failed validation below the height bound");
    }
    result.witnesses.emplace_back(N, std::move(witness));
  }

  for (int N = std::max(result.bracket_low, 0); N <= n_max; ++N) {
    DecisionResult d = ramsey_decision(pattern, n, N, options);
    result.colorings_checked += d.colorings_checked;
    if (d.holds) {
      result.value = N;
      break;
    }
    if (!validate_witness(*d.counterexample, pattern, n).valid()) {
      throw invariant_violation("witness-revalidation",
                                "stored counterexample failed re-validation");
    }
    result.witnesses.emplace_back(N, std::move(*d.counterexample));
  }

  if (result.value.has_value()) {
    if (*result.value < result.bracket_low ||
        (result.bracket_high.has_value() && *result.value > *result.bracket_high)) {
      throw invariant_violation("dimension-bracket",
                                "computed value falls outside the height/dimension bracket");
    }
    if (*result.value + 1 <= n_max) {
      if (!ramsey_decision(pattern, n, *result.value + 1, options).holds) {
        throw invariant_violation("monotonicity", "verdict flips above the computed value");
      }
      result.monotone_rechecked = true;
    }
  }
  return result;
}

namespace {

struct MpnSearch {
  const AbstractPoset& pattern;
  GroundSet ground;
  VertexMask y;
  std::vector<VertexMask> verts;        // canonical order
  std::vector<VertexMask> traces;       // canonical subsets of y
  std::vector<uint32_t> trace_rank;     // by position in verts
  std::vector<uint32_t> suffix_avail;   // trace ranks present from index i on
  uint32_t full_traces = 0;
  std::vector<VertexMask> current;
  uint32_t current_traces = 0;
  long long tested = 0;
  std::optional<InducedSubposet> found;

  MpnSearch(const AbstractPoset& p, GroundSet g, VertexMask y_)
      : pattern(p), ground(std::move(g)), y(y_) {
    verts = submasks_of(ground.all());
    traces = submasks_of(y);
    full_traces = (1u << traces.size()) - 1;
    trace_rank.reserve(verts.size());
    for (VertexMask v : verts) {
      const auto it = std::lower_bound(traces.begin(), traces.end(), v & y, canonical_less);
      trace_rank.push_back(static_cast<uint32_t>(it - traces.begin()));
    }
    suffix_avail.assign(verts.size() + 1, 0);
    for (size_t i = verts.size(); i-- > 0;) {
      suffix_avail[i] = suffix_avail[i + 1] | (1u << trace_rank[i]);
    }
  }

  // Depth-first over include/exclude per vertex, include first. Prunes
  // branches that cannot cover every trace class and branches whose
  // inclusion would complete a pattern copy. Tests blockerhood at leaves.
  bool search(size_t i) {
    if ((current_traces | suffix_avail[i]) != full_traces) return false;
    if (i == verts.size()) {
      ++tested;
      InducedSubposet candidate(ground, current);
      if (!find_avoiding_homomorphism(candidate, y).has_value()) {
        found = std::move(candidate);
        return true;
      }
      return false;
    }
    current.push_back(verts[i]);
    if (!has_induced_copy_through(pattern, current, verts[i])) {
      const uint32_t saved = current_traces;
      current_traces |= 1u << trace_rank[i];
      if (search(i + 1)) return true;
      current_traces = saved;
    }
    current.pop_back();
    return search(i + 1);
  }
};

}  // namespace

MpnResult compute_mpn(const AbstractPoset& pattern, int n, int n_max) {
  if (pattern.size() == 0) throw invalid_input("pattern must be nonempty");
  if (n < 0 || n_max < 0) throw invalid_input("dimensions must be nonnegative");
  if (n_max > 4) {
    throw capacity_error("family enumeration supports host dimension at most 4");
  }

  MpnResult result;
  result.n = n;
  result.scan_start = n + 1;

  for (int N = result.scan_start; N <= n_max; ++N) {
    GroundSet ground = GroundSet::numbered(N);
    const VertexMask y{ground.all().bits() & ~((1u << n) - 1u)};
    MpnSearch search(pattern, ground, y);
    search.search(0);
    result.families_tested += search.tested;
    if (!search.found.has_value()) {
      result.value = N;
      break;
    }
    // Re-validate the stored witness from scratch.
    if (has_induced_copy(pattern, search.found->vertices()) ||
        !is_blocker(*search.found, y).blocker) {
      throw invariant_violation("witness-revalidation", "stored blocker failed re-validation");
    }
    result.witnesses.emplace_back(N, std::move(*search.found));
  }
  return result;
}

}  // namespace qblock
