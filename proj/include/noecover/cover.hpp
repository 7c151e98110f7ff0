#pragma once

#include <optional>
#include <vector>

#include "noecover/limits.hpp"
#include "noecover/mask.hpp"

namespace noecover {

// Minimum-cardinality subfamily of `candidates` whose union is `universe`,
// or nullopt when none exists. Candidates must be sorted ascending; the
// result is the lexicographically least cover (as an ascending mask tuple)
// among the minimum-size ones.
std::optional<std::vector<SubsetMask>> exact_min_cover(SubsetMask universe,
                                                       const std::vector<SubsetMask>& candidates,
                                                       const Limits& limits, const char* what);

} // namespace noecover
