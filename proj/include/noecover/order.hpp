#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noecover/limits.hpp"
#include "noecover/mask.hpp"

namespace noecover {

class ClosureSystem;

// Reflexive transitive relation on {0..n-1}, stored as one mask per element
// in each direction.
class QuasiOrder {
public:
  QuasiOrder() = default;

  // Reflexive-transitive closure of the given pairs (first ≤ second).
  static QuasiOrder from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  // Trusts that below[y] = {x : x ≤ y} is already reflexive and transitive.
  static QuasiOrder from_below_rows(std::vector<SubsetMask> below);

  int size() const { return static_cast<int>(below_.size()); }
  bool leq(int x, int y) const { return below_[static_cast<std::size_t>(y)].contains(x); }
  bool strictly_less(int x, int y) const { return leq(x, y) && !leq(y, x); }
  bool equivalent(int x, int y) const { return leq(x, y) && leq(y, x); }

  SubsetMask below(int y) const { return below_[static_cast<std::size_t>(y)]; }
  SubsetMask above(int x) const { return above_[static_cast<std::size_t>(x)]; }

  SubsetMask down(SubsetMask a) const;
  SubsetMask up(SubsetMask a) const;

  // Relation restricted to the elements of `keep`, reindexed ascending.
  QuasiOrder restrict(SubsetMask keep) const;

  bool is_antisymmetric() const;
  friend bool operator==(const QuasiOrder& a, const QuasiOrder& b) {
    return a.below_ == b.below_;
  }

private:
  std::vector<SubsetMask> below_;
  std::vector<SubsetMask> above_;
};

// Antisymmetric quasi-order. The constructor rejects mutual pairs.
class Poset {
public:
  explicit Poset(QuasiOrder q);
  const QuasiOrder& order() const { return q_; }
  int size() const { return q_.size(); }

private:
  QuasiOrder q_;
};

enum class OrderPredicate {
  antichain,
  initial_segment,
  cofinal,
  ideal,
  up_independent,
  consistent,
};

const char* order_predicate_name(OrderPredicate kind);
std::optional<OrderPredicate> order_predicate_from_name(const std::string& name);

struct PredicateResult {
  bool holds = false;
  // Offending pair or element when the predicate fails.
  std::optional<std::pair<int, int>> pair_witness;
  std::optional<int> element_witness;
  std::string reason;
};

PredicateResult order_predicate(const QuasiOrder& q, SubsetMask a, OrderPredicate kind);

struct Quotient {
  Poset poset;
  std::vector<int> class_of;       // element -> class index
  std::vector<SubsetMask> classes; // class index -> members, ordered by least member
};

Quotient quotient(const QuasiOrder& q);

// Canonical minimal cofinal set: the least-id representative of every maximal
// equivalence class.
SubsetMask well_founded_cofinal(const QuasiOrder& q);

struct DownsetLattice {
  std::vector<SubsetMask> downsets; // ascending
  int longest_chain = 0;            // members of the longest strictly descending chain
};

// On a finite poset every initial segment is finitely generated, so this is
// the full lattice of down-sets.
DownsetLattice fg_initial_segments(const Poset& p, const Limits& limits = {});

// Finite analogue of the ordinal enumeration of a generating set: walk the
// given ground permutation, keeping each element not already generated by the
// picks so far.
std::vector<int> greedy_generating_sequence(const ClosureSystem& s,
                                            const std::vector<int>& order);

struct CorrespondenceViolation {
  SubsetMask subset;
  std::string equivalence; // which of the three failed
  bool order_side = false;
  bool topology_side = false;
};

struct CorrespondenceReport {
  int subsets_checked = 0;
  std::vector<CorrespondenceViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks, over every subset of P, the dictionary between the poset and its
// Alexandroff space: antichain ⟺ discrete, cofinal ⟺ dense, ideal ⟺
// irreducible closed.
CorrespondenceReport correspondence_check(const Poset& p, const Limits& limits = {});

} // namespace noecover
