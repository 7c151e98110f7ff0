#pragma once

#include <cstdint>
#include <string>

#include "noecover/errors.hpp"

namespace noecover {

// Guards for the exhaustive searches. `subset_budget` caps the number of
// subsets a single check may enumerate; NOECOVER_LIMIT overrides it.
struct Limits {
  std::uint64_t subset_budget = std::uint64_t{1} << 16;
  int max_ground = 20;
  int max_powerset_inner = 4;
  int explicit_ideal_limit = 12;

  static Limits from_env();

  // Throws LimitError if enumerating all 2^width subsets would exceed the budget.
  void charge_subsets(int width, const char* what) const;
  void charge(std::uint64_t count, const char* what) const;
};

} // namespace noecover
