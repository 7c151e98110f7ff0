#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noecover/limits.hpp"
#include "noecover/mask.hpp"
#include "noecover/system.hpp"

namespace noecover {

struct IrreducibilityResult {
  bool irreducible = false;
  // Two proper closed subsets whose union is the set, when reducible.
  std::optional<std::pair<SubsetMask, SubsetMask>> split;
  std::string reason; // "empty" when the set is ∅
};

IrreducibilityResult is_irreducible(const ClosureSystem& s, SubsetMask c,
                                    const Limits& limits = {});

// The irreducible members of the closed family, ascending.
std::vector<SubsetMask> enumerate_irreducibles(const ClosureSystem& s, const Limits& limits = {});

enum class DecomposeStrategy { min, components, noether };

const char* decompose_strategy_name(DecomposeStrategy s);
std::optional<DecomposeStrategy> decompose_strategy_from_name(const std::string& name);

struct Decomposition {
  SubsetMask target;
  std::vector<SubsetMask> parts; // ascending; each closed and irreducible
  DecomposeStrategy strategy = DecomposeStrategy::min;
  int min_size = 0;        // cardinality of a minimum decomposition
  int components_size = 0; // number of maximal irreducible closed subsets
};

// Writes a closed set as a finite union of irreducible closed subsets.
//   min        — minimum number of parts, lexicographically least such cover;
//   components — all maximal irreducible closed subsets;
//   noether    — recursive splitting along the least proper closed cover,
//                then irredundantly pruned.
Decomposition decompose(const ClosureSystem& s, SubsetMask c, DecomposeStrategy strategy,
                        const Limits& limits = {});

// Precomputed context so suite-wide loops do not re-enumerate the family.
struct DecomposeContext {
  std::vector<SubsetMask> family;
  std::vector<SubsetMask> irreducibles;
};

DecomposeContext make_decompose_context(const ClosureSystem& s, const Limits& limits = {});
IrreducibilityResult is_irreducible_in(const DecomposeContext& ctx, SubsetMask c);
Decomposition decompose_in(const DecomposeContext& ctx, SubsetMask c, DecomposeStrategy strategy,
                           const Limits& limits = {});

} // namespace noecover
