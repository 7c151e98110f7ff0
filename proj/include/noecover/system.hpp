#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "noecover/limits.hpp"
#include "noecover/mask.hpp"
#include "noecover/order.hpp"

namespace noecover {

struct ImplicationRule {
  SubsetMask premise;
  int conclusion = 0;
};

// Finite closure system: a ground set of labelled elements together with one
// of several operator representations. Immutable once built; closure() is the
// single evaluation entry point for every representation.
class ClosureSystem {
public:
  struct MooreRepr {
    std::vector<SubsetMask> family; // sorted ascending, contains the full set
    bool family_is_fixpoints = true; // false when a raw family was accepted unchecked
  };
  struct ImplicationRepr {
    std::vector<ImplicationRule> rules;
  };
  struct AlexandroffRepr {
    QuasiOrder order;
  };
  struct PowersetUnionRepr {
    int inner = 0; // ground = all subsets of {0..inner-1}
  };
  struct InducedRepr {
    std::shared_ptr<const ClosureSystem> parent;
    SubsetMask parent_mask;          // E' inside the parent ground
    std::vector<int> to_parent;      // local id -> parent id, ascending
  };

  static ClosureSystem moore(std::vector<std::string> labels, std::vector<SubsetMask> family,
                             bool family_is_fixpoints = true);
  static ClosureSystem implications(std::vector<std::string> labels,
                                    std::vector<ImplicationRule> rules);
  static ClosureSystem alexandroff(std::vector<std::string> labels, QuasiOrder order);
  static ClosureSystem powerset_union(int inner);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int id) const { return labels_[static_cast<std::size_t>(id)]; }
  int index_of(const std::string& label) const; // -1 when absent
  SubsetMask full() const { return SubsetMask::full_set(size()); }

  SubsetMask closure(SubsetMask x) const;
  bool is_closed(SubsetMask x) const { return closure(x) == x; }

  const char* repr_name() const;
  const MooreRepr* moore_repr() const { return std::get_if<MooreRepr>(&repr_); }
  const AlexandroffRepr* alexandroff_repr() const { return std::get_if<AlexandroffRepr>(&repr_); }
  const InducedRepr* induced_repr() const { return std::get_if<InducedRepr>(&repr_); }
  const PowersetUnionRepr* powerset_union_repr() const {
    return std::get_if<PowersetUnionRepr>(&repr_);
  }

  // Whether φ preserves finite unions and sends ∅ to ∅. Exhaustive for the
  // representations where it is not decided by construction.
  bool is_topological(const Limits& limits = {}) const;

private:
  using Repr = std::variant<MooreRepr, ImplicationRepr, AlexandroffRepr, PowersetUnionRepr,
                            InducedRepr>;
  ClosureSystem(std::vector<std::string> labels, Repr repr);

  friend ClosureSystem induce(const ClosureSystem&, SubsetMask);

  std::vector<std::string> labels_;
  Repr repr_;
};

// All fixpoints of φ in ascending mask order.
std::vector<SubsetMask> closed_family(const ClosureSystem& s, const Limits& limits = {});

struct IntersectionGap {
  SubsetMask a;
  SubsetMask b;
  SubsetMask missing;
};

struct TopologyCounterexample {
  // Either φ(∅) ≠ ∅ ...
  std::optional<SubsetMask> closure_of_empty;
  // ... or a pair with φ(A∪B) ≠ φ(A)∪φ(B).
  std::optional<std::pair<SubsetMask, SubsetMask>> pair;
};

struct AxiomReport {
  bool extensive = true;
  std::optional<SubsetMask> extensive_witness;
  bool monotone = true;
  std::optional<std::pair<SubsetMask, SubsetMask>> monotone_witness;
  bool idempotent = true;
  std::optional<SubsetMask> idempotent_witness;
  bool intersection_closed = true;
  std::optional<IntersectionGap> intersection_witness;
  bool topological = false;
  std::optional<TopologyCounterexample> topology_witness;

  bool closure_axioms_hold() const { return extensive && monotone && idempotent; }
};

AxiomReport axiom_report(const ClosureSystem& s, const Limits& limits = {});

// Closure system induced on E': φ'(X) = φ(X) ∩ E'. Labels are preserved,
// ids are reindexed ascending.
ClosureSystem induce(const ClosureSystem& s, SubsetMask sub);

// x ≤ y iff x ∈ φ({y}).
QuasiOrder specialization(const ClosureSystem& s);

std::string set_to_string(const ClosureSystem& s, SubsetMask m);

} // namespace noecover
