#include "qblock/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qblock/errors.hpp"

namespace qblock {

namespace {

std::vector<std::string> numbered_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

std::vector<AbstractPoset> all_posets_up_to_iso(int n) {
  if (n < 0) throw invalid_input("element count must be nonnegative");
  if (n > 6) throw capacity_error("isomorphism-class enumeration supports at most 6 elements");
  const auto names = numbered_names(n);
  if (n == 0) return {AbstractPoset::from_leq({}, {})};

  // In some linear extension every strict relation points up in index, so
  // enumerating upper-triangular transitive relations covers every poset.
  const int pair_count = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  std::vector<int> identity(static_cast<size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<AbstractPoset> out;
  for (uint32_t bits = 0; bits < (1u << pair_count); ++bits) {
    std::vector<uint64_t> leq(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i)] |= 1ull << i;
    for (int t = 0; t < pair_count; ++t) {
      if ((bits >> t) & 1u) {
        leq[static_cast<size_t>(pairs[static_cast<size_t>(t)].first)] |=
            1ull << pairs[static_cast<size_t>(t)].second;
      }
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      for (int j = i + 1; j < n && transitive; ++j) {
        if (!((leq[static_cast<size_t>(i)] >> j) & 1ull)) continue;
        // everything above j must be above i
        if ((leq[static_cast<size_t>(j)] & ~leq[static_cast<size_t>(i)]) != 0) {
          transitive = false;
        }
      }
    }
    if (!transitive) continue;

    // Keep only the lexicographically-smallest relabeling of the relation
    // among those that stay upper-triangular — the other relabelings never
    // appear in this enumeration, so comparing against them would discard
    // whole isomorphism classes.
    auto encode = [&](const std::vector<int>& perm) {
      std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if ((leq[static_cast<size_t>(perm[static_cast<size_t>(i)])] >>
               perm[static_cast<size_t>(j)]) &
              1ull) {
            rows[static_cast<size_t>(i)] |= 1ull << j;
          }
        }
      }
      return rows;
    };
    auto upper_triangular = [&](const std::vector<uint64_t>& rows) {
      for (int i = 0; i < n; ++i) {
        if (rows[static_cast<size_t>(i)] & ((1ull << i) - 1)) return false;
      }
      return true;
    };
    const auto own = encode(identity);
    std::vector<int> perm = identity;
    bool canonical = true;
    while (std::next_permutation(perm.begin(), perm.end())) {
      const auto other = encode(perm);
      if (upper_triangular(other) && other < own) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.push_back(AbstractPoset::from_leq(names, own));
  }
  return out;
}

AbstractPoset random_poset(int n, std::mt19937_64& rng) {
  if (n < 1) throw invalid_input("element count must be positive");
  if (n > 16) throw capacity_error("random posets support at most 16 elements");
  const auto names = numbered_names(n);
  while (true) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && rng() % 8 == 0) arcs.emplace_back(i, j);
      }
    }
    try {
      return AbstractPoset::from_covers(names, arcs);
    } catch (const invalid_input&) {
      // closure violated antisymmetry (a cycle); resample
    }
  }
}

}  // namespace qblock
