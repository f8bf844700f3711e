#include "qfca/budget.hpp"

#include <cstdlib>
#include <string>

namespace qfca {

Budget Budget::uniform(std::uint64_t cap) {
  return Budget{cap, cap, cap, cap};
}

Budget Budget::from_env() {
  const char* raw = std::getenv("QFCA_BUDGET");
  if (raw == nullptr || *raw == '\0') return Budget{};
  try {
    std::size_t used = 0;
    unsigned long long cap = std::stoull(raw, &used);
    if (used == std::string(raw).size() && cap > 0) return uniform(cap);
  } catch (const std::exception&) {
  }
  return Budget{};
}

}  // namespace qfca
