#include "noecover/system.hpp"

#include <algorithm>
#include <cassert>

#include "noecover/errors.hpp"

namespace noecover {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw InputError("duplicate label \"" + labels[i] + "\"");
}

std::string pu_label(int inner_set) {
  std::string out = "p";
  for (int d = 0; d < 32; ++d)
    if ((inner_set >> d) & 1) out += std::to_string(d);
  return out;
}

} // namespace

ClosureSystem::ClosureSystem(std::vector<std::string> labels, Repr repr)
    : labels_(std::move(labels)), repr_(std::move(repr)) {}

ClosureSystem ClosureSystem::moore(std::vector<std::string> labels, std::vector<SubsetMask> family,
                                   bool family_is_fixpoints) {
  check_labels(labels);
  const int n = static_cast<int>(labels.size());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  bool has_full = false;
  for (SubsetMask m : family) {
    if (m.width() != n) throw InputError("Moore family member has the wrong width");
    if (m.is_full()) has_full = true;
  }
  if (!has_full) throw InputError("Moore family must contain the full ground set");
  return ClosureSystem(std::move(labels), MooreRepr{std::move(family), family_is_fixpoints});
}

ClosureSystem ClosureSystem::implications(std::vector<std::string> labels,
                                          std::vector<ImplicationRule> rules) {
  check_labels(labels);
  return ClosureSystem(std::move(labels), ImplicationRepr{std::move(rules)});
}

ClosureSystem ClosureSystem::alexandroff(std::vector<std::string> labels, QuasiOrder order) {
  check_labels(labels);
  if (order.size() != static_cast<int>(labels.size()))
    throw InputError("order size does not match the ground set");
  return ClosureSystem(std::move(labels), AlexandroffRepr{std::move(order)});
}

ClosureSystem ClosureSystem::powerset_union(int inner) {
  if (inner < 0) throw InputError("powerset-union size must be nonnegative");
  std::vector<std::string> labels;
  labels.reserve(std::size_t{1} << inner);
  for (int a = 0; a < (1 << inner); ++a) labels.push_back(pu_label(a));
  return ClosureSystem(std::move(labels), PowersetUnionRepr{inner});
}

int ClosureSystem::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

const char* ClosureSystem::repr_name() const {
  struct Visitor {
    const char* operator()(const MooreRepr&) const { return "moore"; }
    const char* operator()(const ImplicationRepr&) const { return "implications"; }
    const char* operator()(const AlexandroffRepr&) const { return "preorder"; }
    const char* operator()(const PowersetUnionRepr&) const { return "powerset-union"; }
    const char* operator()(const InducedRepr&) const { return "induced"; }
  };
  return std::visit(Visitor{}, repr_);
}

SubsetMask ClosureSystem::closure(SubsetMask x) const {
  assert(x.width() == size());
  struct Visitor {
    SubsetMask x;
    int n;
    SubsetMask operator()(const MooreRepr& r) const {
      SubsetMask out = SubsetMask::full_set(n);
      for (SubsetMask c : r.family)
        if (x.subset_of(c)) out = out & c;
      return out;
    }
    SubsetMask operator()(const ImplicationRepr& r) const {
      SubsetMask cur = x;
      bool changed = true;
      while (changed) {
        changed = false;
        for (const ImplicationRule& rule : r.rules)
          if (rule.premise.subset_of(cur) && !cur.contains(rule.conclusion)) {
            cur = cur.with(rule.conclusion);
            changed = true;
          }
      }
      return cur;
    }
    SubsetMask operator()(const AlexandroffRepr& r) const { return r.order.down(x); }
    SubsetMask operator()(const PowersetUnionRepr&) const {
      // Element ids are exactly the subsets of {0..inner-1}.
      std::uint32_t u = 0;
      for (int e : x.elements()) u |= static_cast<std::uint32_t>(e);
      SubsetMask out = SubsetMask::empty_set(n);
      for (int e = 0; e < n; ++e)
        if ((static_cast<std::uint32_t>(e) & ~u) == 0) out = out.with(e);
      return out;
    }
    SubsetMask operator()(const InducedRepr& r) const {
      SubsetMask up = SubsetMask::empty_set(r.parent->size());
      for (int e : x.elements()) up = up.with(r.to_parent[static_cast<std::size_t>(e)]);
      SubsetMask cl = r.parent->closure(up) & r.parent_mask;
      SubsetMask out = SubsetMask::empty_set(n);
      for (int i = 0; i < n; ++i)
        if (cl.contains(r.to_parent[static_cast<std::size_t>(i)])) out = out.with(i);
      return out;
    }
  };
  return std::visit(Visitor{x, size()}, repr_);
}

bool ClosureSystem::is_topological(const Limits& limits) const {
  if (std::holds_alternative<AlexandroffRepr>(repr_)) return true;
  // φ(∅) always contains the element labelled "p", so never a topology.
  if (std::holds_alternative<PowersetUnionRepr>(repr_)) return false;
  const int n = size();
  limits.charge_subsets(n, "topological check");
  if (!closure(SubsetMask::empty_set(n)).empty()) return false;
  std::vector<SubsetMask> single(static_cast<std::size_t>(n), SubsetMask::empty_set(n));
  for (int e = 0; e < n; ++e) single[static_cast<std::size_t>(e)] = closure(SubsetMask::empty_set(n).with(e));
  bool ok = true;
  for_each_mask(n, [&](SubsetMask x) {
    if (!ok) return;
    SubsetMask u = SubsetMask::empty_set(n);
    for (int e : x.elements()) u = u | single[static_cast<std::size_t>(e)];
    if (closure(x) != u) ok = false;
  });
  return ok;
}

std::vector<SubsetMask> closed_family(const ClosureSystem& s, const Limits& limits) {
  const int n = s.size();
  if (const auto* moore = s.moore_repr(); moore && moore->family_is_fixpoints)
    return moore->family;
  if (const auto* alex = s.alexandroff_repr()) {
    limits.charge_subsets(n, "closed_family");
    std::vector<SubsetMask> out;
    for_each_mask(n, [&](SubsetMask m) {
      if (alex->order.down(m) == m) out.push_back(m);
    });
    return out;
  }
  if (const auto* pu = s.powerset_union_repr()) {
    std::vector<SubsetMask> out;
    for (int a = 0; a < (1 << pu->inner); ++a) {
      SubsetMask m = SubsetMask::empty_set(n);
      for (int e = 0; e < n; ++e)
        if ((static_cast<std::uint32_t>(e) & ~static_cast<std::uint32_t>(a)) == 0) m = m.with(e);
      out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (const auto* ind = s.induced_repr()) {
    std::vector<SubsetMask> parent_family = closed_family(*ind->parent, limits);
    std::vector<SubsetMask> out;
    out.reserve(parent_family.size());
    for (SubsetMask c : parent_family) {
      SubsetMask cut = c & ind->parent_mask;
      SubsetMask m = SubsetMask::empty_set(n);
      for (int i = 0; i < n; ++i)
        if (cut.contains(ind->to_parent[static_cast<std::size_t>(i)])) m = m.with(i);
      out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  limits.charge_subsets(n, "closed_family");
  std::vector<SubsetMask> out;
  for_each_mask(n, [&](SubsetMask m) {
    if (s.is_closed(m)) out.push_back(m);
  });
  return out;
}

AxiomReport axiom_report(const ClosureSystem& s, const Limits& limits) {
  const int n = s.size();
  limits.charge_subsets(n, "axiom_report");
  AxiomReport rep;

  for_each_mask(n, [&](SubsetMask x) {
    if (rep.extensive && !x.subset_of(s.closure(x))) {
      rep.extensive = false;
      rep.extensive_witness = x;
    }
    if (rep.idempotent) {
      SubsetMask c = s.closure(x);
      if (s.closure(c) != c) {
        rep.idempotent = false;
        rep.idempotent_witness = x;
      }
    }
  });

  // Monotonicity along single-element extensions covers all inclusions.
  for_each_mask(n, [&](SubsetMask x) {
    if (!rep.monotone) return;
    SubsetMask cx = s.closure(x);
    for (int y = 0; y < n && rep.monotone; ++y) {
      if (x.contains(y)) continue;
      SubsetMask bigger = x.with(y);
      if (!cx.subset_of(s.closure(bigger))) {
        rep.monotone = false;
        rep.monotone_witness = {x, bigger};
      }
    }
  });

  {
    // For a Moore representation the given family itself is checked; other
    // representations are checked on their computed family of fixpoints.
    const std::vector<SubsetMask>* fam;
    std::vector<SubsetMask> computed;
    if (const auto* moore = s.moore_repr()) {
      fam = &moore->family;
    } else {
      computed = closed_family(s, limits);
      fam = &computed;
    }
    limits.charge(static_cast<std::uint64_t>(fam->size()) * fam->size(),
                  "intersection-closure check");
    for (std::size_t i = 0; i < fam->size() && rep.intersection_closed; ++i)
      for (std::size_t j = i + 1; j < fam->size() && rep.intersection_closed; ++j) {
        SubsetMask meet = (*fam)[i] & (*fam)[j];
        if (!std::binary_search(fam->begin(), fam->end(), meet)) {
          rep.intersection_closed = false;
          rep.intersection_witness = IntersectionGap{(*fam)[i], (*fam)[j], meet};
        }
      }
  }

  {
    SubsetMask empty_closure = s.closure(SubsetMask::empty_set(n));
    if (!empty_closure.empty()) {
      rep.topological = false;
      rep.topology_witness = TopologyCounterexample{empty_closure, std::nullopt};
    } else {
      std::vector<SubsetMask> single(static_cast<std::size_t>(n));
      for (int e = 0; e < n; ++e)
        single[static_cast<std::size_t>(e)] = s.closure(SubsetMask::empty_set(n).with(e));
      // Track the smallest violating set so the derived pair witness is valid:
      // every proper subset of a cardinality-minimal violator already equals
      // the union of its singleton closures.
      std::optional<SubsetMask> violator;
      for_each_mask(n, [&](SubsetMask x) {
        SubsetMask u = SubsetMask::empty_set(n);
        for (int e : x.elements()) u = u | single[static_cast<std::size_t>(e)];
        if (s.closure(x) != u)
          if (!violator || x.count() < violator->count()) violator = x;
      });
      if (!violator) {
        rep.topological = true;
      } else {
        rep.topological = false;
        int least = violator->least_element();
        rep.topology_witness = TopologyCounterexample{
            std::nullopt,
            std::make_pair(violator->without(least), SubsetMask::empty_set(n).with(least))};
      }
    }
  }
  return rep;
}

ClosureSystem induce(const ClosureSystem& s, SubsetMask sub) {
  assert(sub.width() == s.size());
  std::vector<int> ids = sub.elements();
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (int id : ids) labels.push_back(s.label(id));
  ClosureSystem::InducedRepr repr{std::make_shared<ClosureSystem>(s), sub, std::move(ids)};
  return ClosureSystem(std::move(labels), ClosureSystem::Repr{std::move(repr)});
}

QuasiOrder specialization(const ClosureSystem& s) {
  const int n = s.size();
  std::vector<SubsetMask> below(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y)
    below[static_cast<std::size_t>(y)] = s.closure(SubsetMask::empty_set(n).with(y));
  return QuasiOrder::from_below_rows(std::move(below));
}

std::string set_to_string(const ClosureSystem& s, SubsetMask m) {
  std::string out = "{";
  bool first = true;
  for (int e : m.elements()) {
    if (!first) out += ",";
    out += s.label(e);
    first = false;
  }
  return out + "}";
}

} // namespace noecover
