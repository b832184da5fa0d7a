#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qblock/blockers.hpp"

namespace qblock {

// Bottom `red_layer_count` popcount layers red, the rest blue.
Coloring layered_coloring(const GroundSet& ground, int red_layer_count);

struct WitnessCheck {
  bool no_blue_pattern = false;
  bool no_red_cube = false;

  bool valid() const { return no_blue_pattern && no_red_cube; }
};

// Re-validates a counterexample candidate by explicit searches.
WitnessCheck validate_witness(const Coloring& coloring, const AbstractPoset& pattern, int n);

struct RamseyOptions {
  int jobs = 1;        // worker threads over the coloring space
  bool symmetry = false;  // restrict to lexicographically-minimal orbit representatives
};

struct DecisionResult {
  bool holds = false;
  std::optional<Coloring> counterexample;  // least coloring bitmap that avoids both targets
  long long colorings_checked = 0;
};

// Does every red/blue coloring of Q([cube_size]) contain a blue induced copy
// of the pattern or an all-red good copy of the n-cube? Exhaustive over all
// 2^(2^cube_size) colorings; cube_size ≤ 4.
DecisionResult ramsey_decision(const AbstractPoset& pattern, int n, int cube_size,
                               const RamseyOptions& options = {});

struct RamseyResult {
  int n = 0;
  std::optional<int> value;  // smallest passing dimension, when found below the cap
  // One validated counterexample per dimension below the value (or up to the
  // cap when the value is unknown).
  std::vector<std::pair<int, Coloring>> witnesses;
  long long colorings_checked = 0;
  int bracket_low = 0;                 // n + height − 1
  std::optional<int> bracket_high;     // height·n + two-dimension, when computable
  bool monotone_rechecked = false;     // value+1 re-verified when within the cap
};

// Ascending scan of ramsey_decision. Dimensions below n+height−1 are settled
// by layered witnesses (n red bottom layers cap the red popcount span below
// any good n-cube copy; the blue remainder is too short for the pattern),
// each re-validated explicitly.
RamseyResult ramsey_number(const AbstractPoset& pattern, int n, int n_max,
                           const RamseyOptions& options = {});

struct MpnResult {
  int n = 0;
  int scan_start = 0;        // n+1: the blocked set must be nonempty
  std::optional<int> value;  // first N admitting no pattern-free blocker
  // For each smaller N, a pattern-free blocker for the trailing N−n elements.
  std::vector<std::pair<int, InducedSubposet>> witnesses;
  long long families_tested = 0;
};

// Smallest N such that Q([N]) has no pattern-free blocker of the last N−n
// ground elements (one representative blocked set per size; relabeling maps
// the blocked sets of a size onto each other and preserves both properties).
// Searches families in canonical depth-first order; N ≤ 4 per candidate.
MpnResult compute_mpn(const AbstractPoset& pattern, int n, int n_max);

}  // namespace qblock
