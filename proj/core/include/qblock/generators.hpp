#pragma once

#include <random>
#include <vector>

#include "qblock/abstract_poset.hpp"

namespace qblock {

// Every poset on n elements, one representative per isomorphism class,
// deterministically ordered. Supported for n ≤ 6.
std::vector<AbstractPoset> all_posets_up_to_iso(int n);

// Random poset: sample arcs independently, take the reflexive-transitive
// closure, and reject samples whose closure violates antisymmetry.
// Reproducible for a given seeded engine. Supported for n ≤ 16.
AbstractPoset random_poset(int n, std::mt19937_64& rng);

}  // namespace qblock
