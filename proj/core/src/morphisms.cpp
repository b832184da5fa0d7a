#include "qblock/morphisms.hpp"

#include <algorithm>
#include <bit>

#include "qblock/errors.hpp"

namespace qblock {

namespace {

// Ascending enumeration of all submasks of `within`: 0 first, `within` last.
// next_submask(within, within) wraps to 0.
constexpr uint32_t next_submask(uint32_t s, uint32_t within) {
  return (s - within) & within;
}

int rank_in(const std::vector<VertexMask>& sorted, VertexMask v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v, canonical_less);
  if (it == sorted.end() || !(*it == v)) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

bool is_weak_homomorphism(const InducedSubposet& domain, const SetMap& m) {
  if (m.image.size() != static_cast<size_t>(domain.size())) {
    throw invalid_input("map image size does not match domain size");
  }
  const auto& vs = domain.vertices();
  const int n = static_cast<int>(vs.size());
  for (int i = 0; i < n; ++i) {
    if (!m.image[i].subset_of(m.y)) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (vs[i].subset_of(vs[j]) && !m.image[i].subset_of(m.image[j])) return false;
    }
  }
  return true;
}

bool is_avoiding(const InducedSubposet& domain, const SetMap& m) {
  if (m.image.size() != static_cast<size_t>(domain.size())) {
    throw invalid_input("map image size does not match domain size");
  }
  const auto& vs = domain.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    if (m.image[i] == (vs[i] & m.y)) return false;
  }
  return true;
}

bool embedding_is_induced(const AbstractPoset& pattern, const PatternEmbedding& e) {
  if (e.image.size() != static_cast<size_t>(pattern.size())) {
    throw invalid_input("embedding image size does not match pattern size");
  }
  const int n = pattern.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && e.image[i] == e.image[j]) return false;
      if (pattern.leq(i, j) != e.image[i].subset_of(e.image[j])) return false;
    }
  }
  return true;
}

namespace {

// Backtracking search for an induced copy. Pattern elements are assigned in
// a linear-extension order; host vertices are tried in list order, so with a
// canonically sorted host the first hit is canonical.
struct CopySearch {
  const AbstractPoset& pattern;
  const std::vector<VertexMask>& host;
  std::vector<int> order;
  std::vector<VertexMask> img;
  std::vector<char> used;
  bool need_pin = false;
  VertexMask pinned = VertexMask::empty_set();

  CopySearch(const AbstractPoset& p, const std::vector<VertexMask>& h)
      : pattern(p), host(h), order(p.linear_extension()),
        img(p.size(), VertexMask::empty_set()), used(h.size(), 0) {}

  bool compatible(int elem, VertexMask v, int depth) const {
    for (int t = 0; t < depth; ++t) {
      const int prev = order[t];
      const VertexMask w = img[prev];
      if (pattern.leq(prev, elem) != w.subset_of(v)) return false;
      if (pattern.leq(elem, prev) != v.subset_of(w)) return false;
    }
    return true;
  }

  bool search(int depth) {
    if (depth == pattern.size()) {
      if (!need_pin) return true;
      for (int e = 0; e < pattern.size(); ++e) {
        if (img[e] == pinned) return true;
      }
      return false;
    }
    const int elem = order[depth];
    for (size_t h = 0; h < host.size(); ++h) {
      if (used[h]) continue;
      if (!compatible(elem, host[h], depth)) continue;
      used[h] = 1;
      img[elem] = host[h];
      if (search(depth + 1)) return true;
      used[h] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<PatternEmbedding> find_induced_copy(const AbstractPoset& pattern,
                                                  const InducedSubposet& host) {
  CopySearch s(pattern, host.vertices());
  if (!s.search(0)) return std::nullopt;
  return PatternEmbedding{s.img};
}

bool has_induced_copy(const AbstractPoset& pattern, const std::vector<VertexMask>& host) {
  CopySearch s(pattern, host);
  return s.search(0);
}

bool has_induced_copy_through(const AbstractPoset& pattern, const std::vector<VertexMask>& host,
                              VertexMask pinned) {
  CopySearch s(pattern, host);
  s.need_pin = true;
  s.pinned = pinned;
  return s.search(0);
}

namespace {

struct AbstractCopySearch {
  const AbstractPoset& pattern;
  const AbstractPoset& host;
  std::vector<int> order;
  std::vector<int> img;
  std::vector<char> used;

  AbstractCopySearch(const AbstractPoset& p, const AbstractPoset& h)
      : pattern(p), host(h), order(p.linear_extension()), img(p.size(), -1), used(h.size(), 0) {}

  bool compatible(int elem, int hv, int depth) const {
    for (int t = 0; t < depth; ++t) {
      const int prev = order[t];
      if (pattern.leq(prev, elem) != host.leq(img[prev], hv)) return false;
      if (pattern.leq(elem, prev) != host.leq(hv, img[prev])) return false;
    }
    return true;
  }

  bool search(int depth) {
    if (depth == pattern.size()) return true;
    const int elem = order[depth];
    for (int hv = 0; hv < host.size(); ++hv) {
      if (used[hv] || !compatible(elem, hv, depth)) continue;
      used[hv] = 1;
      img[elem] = hv;
      if (search(depth + 1)) return true;
      used[hv] = 0;
    }
    return false;
  }
};

}  // namespace

bool has_induced_copy(const AbstractPoset& pattern, const AbstractPoset& host) {
  AbstractCopySearch s(pattern, host);
  return s.search(0);
}

bool poset_isomorphic(const AbstractPoset& a, const AbstractPoset& b) {
  if (a.size() != b.size()) return false;
  return has_induced_copy(a, b);
}

XGoodEmbedding::XGoodEmbedding(GroundSet ground, VertexMask x, std::vector<VertexMask> image)
    : ground_(std::move(ground)), x_(x), args_(submasks_of(x)), image_(std::move(image)) {
  if (!x_.subset_of(ground_.all())) {
    throw invalid_input("embedding domain set is not within the ground set");
  }
  if (image_.size() != args_.size()) {
    throw invalid_input("embedding image size is not 2^|domain set|");
  }
  for (VertexMask v : image_) {
    if (!v.subset_of(ground_.all())) {
      throw invalid_input("embedding image vertex is not within the ground set");
    }
  }
}

VertexMask XGoodEmbedding::map(VertexMask x_subset) const {
  const int r = rank_in(args_, x_subset);
  if (r < 0) throw invalid_input("argument is not a subset of the embedding domain set");
  return image_[static_cast<size_t>(r)];
}

InducedSubposet XGoodEmbedding::image_subposet() const {
  return InducedSubposet(ground_, image_);
}

bool is_strong_x_good(const XGoodEmbedding& e) {
  const auto& args = e.arguments();
  const auto& img = e.image();
  const size_t n = args.size();
  for (size_t i = 0; i < n; ++i) {
    if ((img[i] & e.x()) != args[i]) return false;
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (args[i].subset_of(args[j]) != img[i].subset_of(img[j])) return false;
    }
  }
  return true;
}

std::optional<VertexMask> defining_set(const InducedSubposet& copy) {
  const size_t sz = copy.size();
  if (sz == 0 || (sz & (sz - 1)) != 0) {
    throw invalid_input("vertex set size is not a power of two");
  }
  if (sz > 64) {
    throw capacity_error("defining-set search supports at most 64 vertices");
  }
  const int n = std::countr_zero(sz);
  const uint32_t all = copy.ground().all().bits();
  // Ascending mask order over candidate n-element subsets of the ground set.
  for (uint32_t xm = 0;; xm = (xm - all) & all) {
    if (std::popcount(xm) == n) {
      const VertexMask x{xm};
      const auto args = submasks_of(x);
      std::vector<VertexMask> image(args.size(), VertexMask::empty_set());
      std::vector<char> hit(args.size(), 0);
      bool ok = true;
      for (VertexMask v : copy.vertices()) {
        const int r = rank_in(args, v & x);
        if (r < 0 || hit[static_cast<size_t>(r)]) {
          ok = false;
          break;
        }
        hit[static_cast<size_t>(r)] = 1;
        image[static_cast<size_t>(r)] = v;
      }
      if (ok) {
        const XGoodEmbedding e(copy.ground(), x, image);
        if (is_strong_x_good(e)) return x;
      }
    }
    if (xm == all) break;
  }
  return std::nullopt;
}

std::optional<SetMap> find_avoiding_homomorphism(const InducedSubposet& f, VertexMask y,
                                                 HomSearchStats* stats) {
  if (y.empty()) {
    throw invalid_input("avoidance target set must be nonempty");
  }
  if (!y.subset_of(f.ground().all())) {
    throw invalid_input("target set is not within the ground set");
  }
  const auto& vs = f.vertices();
  const int n = static_cast<int>(vs.size());
  std::vector<std::vector<int>> preds(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (vs[j].subset_of(vs[i])) preds[static_cast<size_t>(i)].push_back(j);
    }
  }
  const uint32_t ym = y.bits();
  std::vector<uint32_t> img(static_cast<size_t>(n), 0);
  long long nodes = 0;

  // Vertices in canonical order form a linear extension, so each vertex's
  // image is bounded below by the union of its predecessors' images.
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    uint32_t lb = 0;
    for (int j : preds[static_cast<size_t>(i)]) lb |= img[static_cast<size_t>(j)];
    const uint32_t forbidden = vs[static_cast<size_t>(i)].bits() & ym;
    const uint32_t free = ym & ~lb;
    // Candidates ascend in mask value: lb | e over ascending submasks e.
    uint32_t e = 0;
    while (true) {
      const uint32_t c = lb | e;
      ++nodes;
      if (c != forbidden) {
        img[static_cast<size_t>(i)] = c;
        if (self(self, i + 1)) return true;
      }
      e = next_submask(e, free);
      if (e == 0) break;
    }
    return false;
  };

  const bool found = rec(rec, 0);
  if (stats != nullptr) stats->nodes = nodes;
  if (!found) return std::nullopt;
  SetMap m{y, {}};
  m.image.reserve(static_cast<size_t>(n));
  for (uint32_t c : img) m.image.emplace_back(c);
  return m;
}

XGoodEmbedding construct_avoiding_embedding(const InducedSubposet& f, const SetMap& phi,
                                            VertexMask x, VertexMask y) {
  const VertexMask all = f.ground().all();
  if (!(x & y).empty() || !((x | y) == all)) {
    throw invalid_input("domain and target sets must partition the ground set");
  }
  if (!(phi.y == y)) {
    throw invalid_input("map target set does not match the requested target set");
  }
  if (!is_weak_homomorphism(f, phi)) {
    throw invalid_input("map is not order-preserving into the target lattice");
  }
  if (!is_avoiding(f, phi)) {
    throw invalid_input("map does not avoid every trace value");
  }

  const auto& vs = f.vertices();
  const auto args = submasks_of(x);
  std::vector<VertexMask> image;
  image.reserve(args.size());
  for (VertexMask arg : args) {
    // Least fixed point of: collect family vertices inside arg ∪ acc, fold
    // in their map values. Grows monotonically, so it stops within |y|+1
    // rounds.
    VertexMask acc = VertexMask::empty_set();
    while (true) {
      VertexMask next = VertexMask::empty_set();
      for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].subset_of(arg | acc)) next = next | phi.image[i];
      }
      if (next == acc) break;
      acc = next;
    }
    image.push_back(arg | acc);
  }

  XGoodEmbedding e(f.ground(), x, image);
  if (!is_strong_x_good(e)) {
    throw invariant_violation("duality-converse", "constructed embedding is not strong");
  }
  for (VertexMask v : e.image()) {
    if (f.contains(v)) {
      throw invariant_violation("duality-converse",
                                "constructed copy meets the family at " +
                                    f.ground().set_string(v));
    }
  }
  return e;
}

void for_each_x_good_copy(const GroundSet& ground, VertexMask x, VertexMask y,
                          const std::function<bool(const XGoodEmbedding&)>& visit) {
  if (!x.subset_of(ground.all()) || !y.subset_of(ground.all())) {
    throw invalid_input("domain and target sets must lie within the ground set");
  }
  if (!(x & y).empty()) {
    throw invalid_input("domain and target sets must be disjoint");
  }
  const long long cost = static_cast<long long>(y.count()) * (1LL << x.count());
  if (cost > 24) {
    throw capacity_error("copy enumeration supports |target|*2^|domain| up to 24");
  }

  const auto args = submasks_of(x);
  const size_t n = args.size();
  // A copy with identity trace on x is exactly arg ∪ g(arg) for a monotone
  // g into Q(y); enumerate g by canonical argument order with ascending
  // candidate values.
  std::vector<std::vector<size_t>> preds(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (args[j].subset_of(args[i])) preds[i].push_back(j);
    }
  }
  const uint32_t ym = y.bits();
  std::vector<uint32_t> g(n, 0);
  bool stopped = false;

  auto rec = [&](auto&& self, size_t i) -> void {
    if (stopped) return;
    if (i == n) {
      std::vector<VertexMask> image;
      image.reserve(n);
      for (size_t t = 0; t < n; ++t) image.push_back(args[t] | VertexMask{g[t]});
      if (!visit(XGoodEmbedding(ground, x, std::move(image)))) stopped = true;
      return;
    }
    uint32_t lb = 0;
    for (size_t j : preds[i]) lb |= g[j];
    const uint32_t free = ym & ~lb;
    uint32_t e = 0;
    while (true) {
      g[i] = lb | e;
      self(self, i + 1);
      if (stopped) return;
      e = next_submask(e, free);
      if (e == 0) break;
    }
  };
  rec(rec, 0);
}

std::vector<XGoodEmbedding> enumerate_x_good_copies(const GroundSet& ground, VertexMask x,
                                                    VertexMask y) {
  std::vector<XGoodEmbedding> out;
  for_each_x_good_copy(ground, x, y, [&](const XGoodEmbedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::optional<int> two_dimension(const AbstractPoset& p, int cap) {
  if (cap < 0 || cap > kMaxLatticeGround) {
    throw invalid_input("dimension cap must be between 0 and the lattice ground limit");
  }
  for (int m = 0; m <= cap; ++m) {
    const auto host = boolean_lattice(GroundSet::numbered(m));
    if (has_induced_copy(p, host.vertices())) return m;
  }
  return std::nullopt;
}

}  // namespace qblock
