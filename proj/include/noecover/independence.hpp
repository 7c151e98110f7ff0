#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "noecover/limits.hpp"
#include "noecover/mask.hpp"
#include "noecover/system.hpp"

namespace noecover {

struct IndependenceReport {
  bool independent = false;
  std::optional<int> violating_element;
  bool generating = false;
  // Present only when the system is topological (and the check fit in the
  // budget): every subset of X closed in the topology induced on X.
  std::optional<bool> discrete;
  std::optional<SubsetMask> non_closed_witness;
};

// x ∉ φ(X∖{x}) for every x ∈ X.
bool is_independent(const ClosureSystem& s, SubsetMask x);

IndependenceReport independence_check(const ClosureSystem& s, SubsetMask x,
                                      const Limits& limits = {});

struct ExtremalSet {
  SubsetMask set;
  int size = 0;
};

// Largest independent set, least mask among the maxima. Branch and bound with
// hereditary pruning; node count is charged against the budget.
ExtremalSet max_independent(const ClosureSystem& s, const Limits& limits = {});

// Smallest generating set, least mask among the minima.
ExtremalSet min_generating(const ClosureSystem& s, const Limits& limits = {});

struct BooleanEmbedding {
  // S' ⊆ X paired with φ(S'), ascending in S'.
  std::vector<std::pair<SubsetMask, SubsetMask>> images;
  bool verified = false; // S' ⊆ T' ⟺ φ(S') ⊆ φ(T') checked over all pairs
};

BooleanEmbedding boolean_embedding(const ClosureSystem& s, SubsetMask x,
                                   const Limits& limits = {});

} // namespace noecover
