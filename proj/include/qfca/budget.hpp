#pragma once

#include <cstdint>

namespace qfca {

// Caps for the exhaustive searches. QFCA_BUDGET (a positive integer)
// replaces every cap at once.
struct Budget {
  std::uint64_t presheaf_enumeration = 100'000;
  std::uint64_t family_search = 1'000'000;
  std::uint64_t equivalence_nodes = 1'000'000;
  std::uint64_t closure_size = 1'000'000;

  static Budget uniform(std::uint64_t cap);
  static Budget from_env();
};

}  // namespace qfca
