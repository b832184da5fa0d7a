#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qblock {

// Finite poset on elements 0..size()-1, stored as the full ≤ relation (one
// bit row per element). Every constructor checks the order axioms.
class AbstractPoset {
 public:
  static constexpr int kMaxElements = 64;

  // Cover (or any generating) relations; the reflexive-transitive closure is
  // taken, then antisymmetry is checked. invalid_input on violations.
  static AbstractPoset from_covers(std::vector<std::string> elements,
                                   const std::vector<std::pair<int, int>>& below_above);
  // Full relation rows (bit j of row i means i ≤ j); all three axioms checked.
  static AbstractPoset from_leq(std::vector<std::string> elements,
                                std::vector<std::uint64_t> leq_rows);

  // stock shapes
  static AbstractPoset single();
  static AbstractPoset chain(int n);
  static AbstractPoset antichain(int n);
  static AbstractPoset v_shape();       // one bottom below two incomparable tops
  static AbstractPoset lambda_shape();  // two incomparable bottoms below one top
  static AbstractPoset n_shape();       // a<c, b<c, b<d; a∥b, a∥d, c∥d
  static AbstractPoset boolean(int dim);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  bool leq(int i, int j) const { return (leq_[i] >> j) & 1u; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }
  std::uint64_t up_row(int i) const { return leq_[i]; }
  std::vector<std::pair<int, int>> cover_pairs() const;
  // elements listed in an order compatible with ≤ (used as a search order)
  std::vector<int> linear_extension() const;

  friend bool operator==(const AbstractPoset&, const AbstractPoset&) = default;

 private:
  AbstractPoset(std::vector<std::string> elements, std::vector<std::uint64_t> leq);
  void check_axioms() const;

  std::vector<std::string> elements_;
  std::vector<std::uint64_t> leq_;  // row i, bit j: i ≤ j
};

// Longest chain, counted in elements. Empty poset has height 0.
int height(const AbstractPoset& p);

// Everything in `low` strictly below everything in `high`.
AbstractPoset series_composition(const AbstractPoset& low, const AbstractPoset& high);
// Disjoint union, no relations across.
AbstractPoset parallel_composition(const AbstractPoset& a, const AbstractPoset& b);

}  // namespace qblock
