#include "qblock/spnfree.hpp"

#include <algorithm>

#include "qblock/errors.hpp"

namespace qblock {

SPTree SPTree::leaf(int element) {
  SPTree t;
  t.kind = Kind::kLeaf;
  t.element = element;
  return t;
}

SPTree SPTree::series(SPTree below, SPTree above) {
  SPTree t;
  t.kind = Kind::kSeries;
  t.left = std::make_unique<SPTree>(std::move(below));
  t.right = std::make_unique<SPTree>(std::move(above));
  return t;
}

SPTree SPTree::parallel(SPTree first, SPTree second) {
  SPTree t;
  t.kind = Kind::kParallel;
  t.left = std::make_unique<SPTree>(std::move(first));
  t.right = std::make_unique<SPTree>(std::move(second));
  return t;
}

SPTree SPTree::clone() const {
  SPTree t;
  t.kind = kind;
  t.element = element;
  if (left) t.left = std::make_unique<SPTree>(left->clone());
  if (right) t.right = std::make_unique<SPTree>(right->clone());
  return t;
}

AbstractPoset evaluate_sp_tree(const SPTree& tree, const AbstractPoset& source) {
  switch (tree.kind) {
    case SPTree::Kind::kLeaf: {
      if (tree.element < 0 || tree.element >= source.size()) {
        throw invalid_input("tree leaf refers to no element of the source poset");
      }
      return AbstractPoset::from_leq({source.elements()[static_cast<size_t>(tree.element)]}, {1});
    }
    case SPTree::Kind::kSeries:
      return series_composition(evaluate_sp_tree(*tree.left, source),
                                evaluate_sp_tree(*tree.right, source));
    case SPTree::Kind::kParallel:
      return parallel_composition(evaluate_sp_tree(*tree.left, source),
                                  evaluate_sp_tree(*tree.right, source));
  }
  throw invalid_input("malformed decomposition tree");
}

namespace {

// Connected components of the graph on `elems` induced by `adjacent`,
// each sorted ascending, ordered by smallest member.
std::vector<std::vector<int>> graph_components(const std::vector<int>& elems,
                                               const std::function<bool(int, int)>& adjacent) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(elems.size(), 0);
  for (size_t start = 0; start < elems.size(); ++start) {
    if (seen[start]) continue;
    std::vector<size_t> stack{start};
    std::vector<int> comp;
    seen[start] = 1;
    while (!stack.empty()) {
      const size_t i = stack.back();
      stack.pop_back();
      comp.push_back(elems[i]);
      for (size_t j = 0; j < elems.size(); ++j) {
        if (!seen[j] && adjacent(elems[i], elems[j])) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::vector<int> flatten_tail(const std::vector<std::vector<int>>& comps, size_t from) {
  std::vector<int> out;
  for (size_t i = from; i < comps.size(); ++i) {
    out.insert(out.end(), comps[i].begin(), comps[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SPTree> decompose(const AbstractPoset& p, const std::vector<int>& elems) {
  if (elems.size() == 1) return SPTree::leaf(elems.front());

  auto comps = graph_components(elems, [&](int a, int b) { return p.comparable(a, b); });
  if (comps.size() >= 2) {
    auto first = decompose(p, comps.front());
    if (!first) return std::nullopt;
    auto rest = decompose(p, flatten_tail(comps, 1));
    if (!rest) return std::nullopt;
    return SPTree::parallel(std::move(*first), std::move(*rest));
  }

  auto blocks = graph_components(
      elems, [&](int a, int b) { return a != b && !p.comparable(a, b); });
  if (blocks.size() >= 2) {
    // Distinct incomparability components are totally ordered block-to-block;
    // find the bottom block and verify it sits fully below the rest.
    size_t bottom = 0;
    for (size_t i = 1; i < blocks.size(); ++i) {
      if (p.less(blocks[i].front(), blocks[bottom].front())) bottom = i;
    }
    std::vector<std::vector<int>> rest_blocks;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (i != bottom) rest_blocks.push_back(blocks[i]);
    }
    const std::vector<int> rest = flatten_tail(rest_blocks, 0);
    for (int a : blocks[bottom]) {
      for (int b : rest) {
        if (!p.less(a, b)) {
          throw invariant_violation("series-split",
                                    "incomparability components are not stacked");
        }
      }
    }
    auto below = decompose(p, blocks[bottom]);
    if (!below) return std::nullopt;
    auto above = decompose(p, rest);
    if (!above) return std::nullopt;
    return SPTree::series(std::move(*below), std::move(*above));
  }

  return std::nullopt;
}

}  // namespace

std::optional<SPTree> sp_decompose(const AbstractPoset& p) {
  if (p.size() == 0) throw invalid_input("cannot decompose an empty poset");
  std::vector<int> elems(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) elems[static_cast<size_t>(i)] = i;
  return decompose(p, elems);
}

bool is_n_free(const AbstractPoset& p) {
  return !has_induced_copy(AbstractPoset::n_shape(), p);
}

bool is_n_free(const InducedSubposet& f) {
  return !has_induced_copy(AbstractPoset::n_shape(), f.vertices());
}

Root find_root(const InducedSubposet& f, VertexMask y, RootPreference pref) {
  if (f.empty()) {
    throw invalid_input("family is empty");
  }
  if (find_avoiding_homomorphism(f, y).has_value()) {
    throw invalid_input("family does not block the given set");
  }
  for (VertexMask v : f.vertices()) {
    if (!find_avoiding_homomorphism(f.without(v), y).has_value()) {
      throw invalid_input("family is not critical: removing " + f.ground().set_string(v) +
                          " keeps it blocking");
    }
  }
  if (!is_n_free(f)) {
    throw invalid_input("family contains the four-element N pattern");
  }

  const auto& vs = f.vertices();
  Root r;
  r.min_available = std::all_of(vs.begin(), vs.end(),
                                [&](VertexMask v) { return vs.front().subset_of(v); });
  r.max_available = std::all_of(vs.begin(), vs.end(),
                                [&](VertexMask v) { return v.subset_of(vs.back()); });
  if (!r.min_available && !r.max_available) {
    throw invariant_violation("root-theorem",
                              "N-free critical blocker has neither a minimum nor a maximum");
  }
  const bool use_min =
      r.min_available && (pref == RootPreference::kPreferMin || !r.max_available);
  if (use_min) {
    r.vertex = vs.front();
    r.type = RootType::kMin;
    if (!(r.vertex & y).empty()) {
      throw invariant_violation("root-trace", "minimum root meets the blocked set");
    }
  } else {
    r.vertex = vs.back();
    r.type = RootType::kMax;
    if (!((r.vertex & y) == y)) {
      throw invariant_violation("root-trace", "maximum root misses part of the blocked set");
    }
  }
  return r;
}

}  // namespace qblock
