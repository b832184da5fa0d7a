#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qblock {

// One functional suite: a named pass/fail verdict plus a human-readable
// account of what was covered.
struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Homomorphism-search and copy-enumeration blocker verdicts agree on every
// family over a 3-element ground set, for every nonempty target.
CheckOutcome check_duality_agreement();

// The two reference families over {1,2,x1,x2} are certified {1,2}-blockers
// under both strategies.
CheckOutcome check_worked_examples();

// Every non-blocker over the 3-element ground set yields a constructed
// disjoint copy passing the strong/X-good invariants argument by argument.
CheckOutcome check_constructive_converse();

// Every critical blocker over up to 4 ground elements with target size ≤ 2
// satisfies the structure suite; the greedy-reduction image equals the
// direct enumeration; single-element targets give exactly 3^(N−1) two-chain
// blockers of the documented shape.
CheckOutcome check_critical_structure_suite();

// Four-element-pattern freeness coincides with series-parallel
// decomposability, exhaustively to 5 elements and on seeded random posets
// of 6–8 elements; every decomposition re-evaluates to an isomorphic poset.
CheckOutcome check_decomposition_equivalence(uint64_t seed = 0);

// Every pattern-free critical blocker from the structure suite yields a
// root; the recursive family construction completes under both preferences
// with all its assertions passing, and the extracted antichain is valid.
CheckOutcome check_root_family_suite();

// Exact values: the 2-chain vs n-cubes gives n+1 for n ≤ 3; the three
// 4-element-or-smaller patterns vs the 1-cube give their exhaustively
// computed values; every value sits inside the height/dimension bracket.
CheckOutcome check_ramsey_exact_values();

// The coloring threshold never exceeds the blocker-existence threshold for
// the three small patterns at n = 1.
CheckOutcome check_blocker_ramsey_inequality();

// The antichain-capacity inverse matches direct binomial evaluation for
// t ≤ 10^6, dominates log2(t), and hits the documented spot values.
CheckOutcome check_sperner_arithmetic();

// All nine suites, in order.
std::vector<CheckOutcome> run_all_checks(uint64_t seed = 0);

}  // namespace qblock
