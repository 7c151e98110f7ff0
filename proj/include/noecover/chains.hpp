#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noecover/limits.hpp"
#include "noecover/mask.hpp"
#include "noecover/system.hpp"

namespace noecover {

// Strictly descending chain I_0 ⊃ I_1 ⊃ … ⊃ I_N of closed sets.
struct ClosedChain {
  std::vector<SubsetMask> sets;
  int depth() const { return static_cast<int>(sets.size()) - 1; }
};

// Validates closedness and strict descent.
ClosedChain make_chain(const ClosureSystem& s, std::vector<SubsetMask> sets);

// A finite chain can stand for an infinite one in two ways. `full` reads the
// separation quantifier verbatim: I ranges over I_1..I_N. `to_depth` treats
// the last member as the truncation point of an infinite tail and quantifies
// I over I_1..I_{N-1} only; otherwise every finite chain ending at the bottom
// closed set would fail for no content-bearing reason.
enum class SeparationMode { full, to_depth };

const char* separation_mode_name(SeparationMode m);
std::optional<SeparationMode> separation_mode_from_name(const std::string& name);

struct SeparatingVerdict {
  SeparationMode mode = SeparationMode::full;
  bool separating = false;
  // Least (index, finite set) such that I_index ⊆ φ(F ∪ J) for every member J.
  std::optional<std::pair<int, SubsetMask>> failure;
};

SeparatingVerdict is_separating(const ClosureSystem& s, const ClosedChain& chain,
                                SeparationMode mode, const Limits& limits = {});

enum class ChainAmbient { induced_on_x, whole };

struct ChainConstruction {
  ClosureSystem system; // the system the chain lives in
  ClosedChain chain;
};

// I_n := φ'(X ∖ {x_i : i < n}) for the canonical enumeration of an
// independent set X; the ambient closure is either induced on X or, for
// topological systems, the whole space.
ChainConstruction chain_from_independent(const ClosureSystem& s, SubsetMask x,
                                         ChainAmbient ambient, const Limits& limits = {});

// Deterministic replay of the inductive extraction of an independent set from
// a separating chain. Starts from the second chain member, always picks the
// least admissible J and the least witness point, and stops when no member
// separates; the result is re-verified independent before returning.
SubsetMask independent_from_separating(const ClosureSystem& s, const ClosedChain& chain,
                                       const Limits& limits = {});

// Least (m ≥ 1, F ⊆ I_0∖I_m by size then mask) with I_m ⊆ φ(F) ∪ J for every
// member J; nullopt iff the chain is fully separating. Topological systems
// only, where φ(F ∪ J) = φ(F) ∪ J.
std::optional<std::pair<int, SubsetMask>> nonseparating_witness(const ClosureSystem& s,
                                                                const ClosedChain& chain,
                                                                const Limits& limits = {});

} // namespace noecover
