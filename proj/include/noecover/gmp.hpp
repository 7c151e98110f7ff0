#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noecover/limits.hpp"
#include "noecover/mask.hpp"
#include "noecover/system.hpp"

namespace noecover {

// Proper ideal of the powerset of a block, either listed outright or given by
// the membership predicate Y ∈ N ⟺ Y ⊆ A ∧ φ(Y) ⊉ target.
struct IdealDescriptor {
  enum class Kind { explicit_sets, implicit };
  Kind kind = Kind::implicit;
  std::vector<SubsetMask> sets; // sorted, explicit form only
  SubsetMask target;            // implicit form only
};

struct GMPBlock {
  SubsetMask elements; // A_i
  IdealDescriptor ideal;
};

struct GMPDecomposition {
  std::vector<GMPBlock> blocks;
  SubsetMask support(int width) const {
    SubsetMask u = SubsetMask::empty_set(width);
    for (const GMPBlock& b : blocks) u = u | b.elements;
    return u;
  }
};

bool in_ideal(const ClosureSystem& s, const GMPBlock& block, SubsetMask y);

// Builds the decomposition from a minimum cover of E by irreducible closed
// sets X_i: A_i = X_i ∖ ⋃_{j≠i} X_j and N_i = {A' ⊆ A_i : φ(A') ≠ X_i}.
// Small blocks are materialized explicitly.
GMPDecomposition gmp_construct(const ClosureSystem& s, const Limits& limits = {});

struct GMPVerifyResult {
  bool ok = false;
  std::optional<SubsetMask> counterexample; // subset of ⋃A_i violating (*)
  std::string detail;
};

// Exhaustive check of condition (*): X generates E ⟺ A_i ∩ X ∉ N_i for all i,
// over every X ⊆ ⋃A_i, after re-validating the ideal invariants.
GMPVerifyResult gmp_verify(const ClosureSystem& s, const GMPDecomposition& d,
                           const Limits& limits = {});

// Whether A_i ∩ φ(⋃_{j≠i} A_j) = ∅ for every block.
bool eq1_holds(const ClosureSystem& s, const GMPDecomposition& d);

// Shrinks blocks to A'_i = A_i ∖ φ(⋃_{j≠i} A_j), N'_i = N_i ∩ P(A'_i).
// Requires (*); the result satisfies (*) again and the disjointness equation.
GMPDecomposition gmp_normalize(const ClosureSystem& s, const GMPDecomposition& d,
                               const Limits& limits = {});

struct Claim1BlockReport {
  SubsetMask block;
  bool membership_ok = false;
  std::optional<SubsetMask> membership_mismatch;
  bool irreducible = false;
  SubsetMask closure_of_block;
};

struct Claim1Report {
  std::vector<Claim1BlockReport> blocks;
  bool ok() const {
    for (const Claim1BlockReport& b : blocks)
      if (!b.membership_ok || !b.irreducible) return false;
    return true;
  }
};

// For a decomposition satisfying (*) and the disjointness equation: checks
// N_i = {Y ⊆ A_i : φ(Y) ⊉ A_i} and that each φ(A_i) is irreducible.
Claim1Report claim1_check(const ClosureSystem& s, const GMPDecomposition& d,
                          const Limits& limits = {});

} // namespace noecover
