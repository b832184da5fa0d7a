#include "qblock/abstract_poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qblock/errors.hpp"
#include "qblock/mask.hpp"

namespace qblock {

namespace {

void check_element_names(const std::vector<std::string>& elements) {
  if (static_cast<int>(elements.size()) > AbstractPoset::kMaxElements)
    throw capacity_error("poset has " + std::to_string(elements.size()) +
                         " elements; the cap is " + std::to_string(AbstractPoset::kMaxElements));
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (e.empty()) throw invalid_input("poset element names must be non-empty");
    if (!seen.insert(e).second) throw invalid_input("duplicate poset element name: " + e);
  }
}

}  // namespace

AbstractPoset::AbstractPoset(std::vector<std::string> elements, std::vector<std::uint64_t> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  check_axioms();
}

void AbstractPoset::check_axioms() const {
  const int n = size();
  for (int i = 0; i < n; ++i)
    if (!leq(i, i)) throw invalid_input("relation is not reflexive at element " + elements_[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(i, j) && leq(j, i))
        throw invalid_input("relation is not antisymmetric between " + elements_[i] + " and " +
                            elements_[j]);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq(i, k) && (leq_[k] & ~leq_[i]) != 0)
        throw invalid_input("relation is not transitive through " + elements_[k]);
}

AbstractPoset AbstractPoset::from_covers(std::vector<std::string> elements,
                                         const std::vector<std::pair<int, int>>& below_above) {
  check_element_names(elements);
  const int n = static_cast<int>(elements.size());
  std::vector<std::uint64_t> leq(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) leq[i] = std::uint64_t{1} << i;
  for (auto [lo, hi] : below_above) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw invalid_input("cover pair index out of range");
    if (lo == hi) throw invalid_input("cover pair relates an element to itself");
    leq[lo] |= std::uint64_t{1} << hi;
  }
  // reflexive-transitive closure (Warshall over bit rows)
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((leq[i] >> k) & 1u) leq[i] |= leq[k];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && ((leq[i] >> j) & 1u) && ((leq[j] >> i) & 1u))
        throw invalid_input("cover relations close into a cycle through " + elements[i]);
  return AbstractPoset(std::move(elements), std::move(leq));
}

AbstractPoset AbstractPoset::from_leq(std::vector<std::string> elements,
                                      std::vector<std::uint64_t> leq_rows) {
  check_element_names(elements);
  if (elements.size() != leq_rows.size())
    throw invalid_input("relation row count does not match the element count");
  return AbstractPoset(std::move(elements), std::move(leq_rows));
}

AbstractPoset AbstractPoset::single() { return from_covers({"a"}, {}); }

AbstractPoset AbstractPoset::chain(int n) {
  if (n < 0) throw invalid_input("chain length must be non-negative");
  std::vector<std::string> els;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    els.push_back("c" + std::to_string(i + 1));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return from_covers(std::move(els), covers);
}

AbstractPoset AbstractPoset::antichain(int n) {
  if (n < 0) throw invalid_input("antichain size must be non-negative");
  std::vector<std::string> els;
  for (int i = 0; i < n; ++i) els.push_back("a" + std::to_string(i + 1));
  return from_covers(std::move(els), {});
}

AbstractPoset AbstractPoset::v_shape() {
  return from_covers({"C", "A", "B"}, {{0, 1}, {0, 2}});
}

AbstractPoset AbstractPoset::lambda_shape() {
  return from_covers({"A", "B", "C"}, {{0, 2}, {1, 2}});
}

AbstractPoset AbstractPoset::n_shape() {
  return from_covers({"A", "B", "C", "D"}, {{0, 2}, {1, 2}, {1, 3}});
}

AbstractPoset AbstractPoset::boolean(int dim) {
  if (dim < 0) throw invalid_input("lattice dimension must be non-negative");
  if (dim > 6) throw capacity_error("abstract Boolean lattice capped at dimension 6 (64 elements)");
  std::vector<VertexMask> subs = submasks_of(VertexMask((1u << dim) - 1));
  const int n = static_cast<int>(subs.size());
  std::vector<std::string> els;
  std::vector<std::uint64_t> leq(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::string name = "{";
    bool first = true;
    for (int e : subs[i].elements()) {
      if (!first) name += ",";
      name += std::to_string(e + 1);
      first = false;
    }
    els.push_back(name + "}");
    for (int j = 0; j < n; ++j)
      if (subs[i].subset_of(subs[j])) leq[i] |= std::uint64_t{1} << j;
  }
  return from_leq(std::move(els), std::move(leq));
}

std::vector<std::pair<int, int>> AbstractPoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (less(i, k) && less(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

std::vector<int> AbstractPoset::linear_extension() const {
  const int n = size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int below_a = 0, below_b = 0;
    for (int k = 0; k < n; ++k) {
      below_a += less(k, a);
      below_b += less(k, b);
    }
    return below_a < below_b;
  });
  return order;
}

int height(const AbstractPoset& p) {
  const int n = p.size();
  std::vector<int> order = p.linear_extension();
  std::vector<int> h(static_cast<std::size_t>(n), 1);
  int best = 0;
  for (int idx : order) {
    for (int k = 0; k < n; ++k)
      if (p.less(k, idx)) h[idx] = std::max(h[idx], h[k] + 1);
    best = std::max(best, h[idx]);
  }
  return best;
}

namespace {

// Join element name lists, making the right side unique where it clashes.
std::vector<std::string> joined_names(const AbstractPoset& a, const AbstractPoset& b) {
  std::vector<std::string> els = a.elements();
  std::set<std::string> taken(els.begin(), els.end());
  for (const auto& e : b.elements()) {
    std::string name = e;
    int suffix = 2;
    while (taken.count(name)) name = e + "_" + std::to_string(suffix++);
    taken.insert(name);
    els.push_back(name);
  }
  return els;
}

}  // namespace

AbstractPoset series_composition(const AbstractPoset& low, const AbstractPoset& high) {
  const int n = low.size(), m = high.size();
  if (n + m > AbstractPoset::kMaxElements)
    throw capacity_error("series composition exceeds the element cap");
  std::vector<std::uint64_t> leq(static_cast<std::size_t>(n + m), 0);
  const std::uint64_t high_all = ((m == 64 ? 0 : (std::uint64_t{1} << m)) - 1) << n;
  for (int i = 0; i < n; ++i) leq[i] = low.up_row(i) | high_all;
  for (int i = 0; i < m; ++i) leq[n + i] = high.up_row(i) << n;
  return AbstractPoset::from_leq(joined_names(low, high), std::move(leq));
}

AbstractPoset parallel_composition(const AbstractPoset& a, const AbstractPoset& b) {
  const int n = a.size(), m = b.size();
  if (n + m > AbstractPoset::kMaxElements)
    throw capacity_error("parallel composition exceeds the element cap");
  std::vector<std::uint64_t> leq(static_cast<std::size_t>(n + m), 0);
  for (int i = 0; i < n; ++i) leq[i] = a.up_row(i);
  for (int i = 0; i < m; ++i) leq[n + i] = b.up_row(i) << n;
  return AbstractPoset::from_leq(joined_names(a, b), std::move(leq));
}

}  // namespace qblock
