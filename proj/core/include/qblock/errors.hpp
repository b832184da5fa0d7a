#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qblock {

// Input violating a documented precondition (bad relation matrix, unknown
// label, empty Y where a nonempty one is required, ...).
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Instance beyond a documented exact-computation cap. The message names the
// cap so callers can report "unknown above cap" instead of guessing.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee failed on data this library itself produced.
// `lemma` names the violated guarantee.
struct invariant_violation : std::runtime_error {
  std::string lemma;
  invariant_violation(std::string lemma_name, const std::string& what)
      : std::runtime_error(lemma_name + ": " + what), lemma(std::move(lemma_name)) {}
};

}  // namespace qblock
