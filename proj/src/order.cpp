#include "noecover/order.hpp"

#include <algorithm>
#include <cassert>

#include "noecover/errors.hpp"
#include "noecover/independence.hpp"
#include "noecover/irreducible.hpp"
#include "noecover/system.hpp"

namespace noecover {

QuasiOrder QuasiOrder::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<SubsetMask> below(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) below[static_cast<std::size_t>(i)] = SubsetMask::empty_set(n).with(i);
  for (auto [x, y] : pairs) {
    assert(x >= 0 && x < n && y >= 0 && y < n);
    below[static_cast<std::size_t>(y)] = below[static_cast<std::size_t>(y)].with(x);
  }
  // Transitive closure: fold the rows of the elements below y into row y.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < n; ++y) {
      SubsetMask row = below[static_cast<std::size_t>(y)];
      SubsetMask next = row;
      for (int x : row.elements()) next = next | below[static_cast<std::size_t>(x)];
      if (next != row) {
        below[static_cast<std::size_t>(y)] = next;
        changed = true;
      }
    }
  }
  return from_below_rows(std::move(below));
}

QuasiOrder QuasiOrder::from_below_rows(std::vector<SubsetMask> below) {
  QuasiOrder q;
  const int n = static_cast<int>(below.size());
  q.below_ = std::move(below);
  q.above_.assign(static_cast<std::size_t>(n), SubsetMask::empty_set(n));
  for (int y = 0; y < n; ++y)
    for (int x : q.below_[static_cast<std::size_t>(y)].elements())
      q.above_[static_cast<std::size_t>(x)] = q.above_[static_cast<std::size_t>(x)].with(y);
  return q;
}

SubsetMask QuasiOrder::down(SubsetMask a) const {
  SubsetMask out = SubsetMask::empty_set(size());
  for (int y : a.elements()) out = out | below(y);
  return out;
}

SubsetMask QuasiOrder::up(SubsetMask a) const {
  SubsetMask out = SubsetMask::empty_set(size());
  for (int x : a.elements()) out = out | above(x);
  return out;
}

QuasiOrder QuasiOrder::restrict(SubsetMask keep) const {
  const std::vector<int> ids = keep.elements();
  const int m = static_cast<int>(ids.size());
  std::vector<SubsetMask> below(static_cast<std::size_t>(m), SubsetMask::empty_set(m));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (leq(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]))
        below[static_cast<std::size_t>(j)] = below[static_cast<std::size_t>(j)].with(i);
  return from_below_rows(std::move(below));
}

bool QuasiOrder::is_antisymmetric() const {
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (leq(x, y) && leq(y, x)) return false;
  return true;
}

Poset::Poset(QuasiOrder q) : q_(std::move(q)) {
  if (!q_.is_antisymmetric())
    throw InputError("relation is not antisymmetric; quotient it into a poset first");
}

const char* order_predicate_name(OrderPredicate kind) {
  switch (kind) {
    case OrderPredicate::antichain: return "antichain";
    case OrderPredicate::initial_segment: return "initial-segment";
    case OrderPredicate::cofinal: return "cofinal";
    case OrderPredicate::ideal: return "ideal";
    case OrderPredicate::up_independent: return "up-independent";
    case OrderPredicate::consistent: return "consistent";
  }
  return "?";
}

std::optional<OrderPredicate> order_predicate_from_name(const std::string& name) {
  for (OrderPredicate k :
       {OrderPredicate::antichain, OrderPredicate::initial_segment, OrderPredicate::cofinal,
        OrderPredicate::ideal, OrderPredicate::up_independent, OrderPredicate::consistent})
    if (name == order_predicate_name(k)) return k;
  return std::nullopt;
}

namespace {

bool compatible(const QuasiOrder& q, int x, int y) { return !(q.above(x) & q.above(y)).empty(); }

// Upper bound inside a itself, as up-directedness requires.
bool upper_bound_within(const QuasiOrder& q, SubsetMask a, int x, int y) {
  return !(q.above(x) & q.above(y) & a).empty();
}

} // namespace

PredicateResult order_predicate(const QuasiOrder& q, SubsetMask a, OrderPredicate kind) {
  PredicateResult r;
  const std::vector<int> elems = a.elements();
  switch (kind) {
    case OrderPredicate::antichain: {
      for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
          if (q.leq(elems[i], elems[j]) || q.leq(elems[j], elems[i])) {
            r.pair_witness = {elems[i], elems[j]};
            return r;
          }
      r.holds = true;
      return r;
    }
    case OrderPredicate::initial_segment: {
      SubsetMask d = q.down(a);
      if (d != a) {
        r.element_witness = (d - a).least_element();
        return r;
      }
      r.holds = true;
      return r;
    }
    case OrderPredicate::cofinal: {
      SubsetMask d = q.down(a);
      if (!d.is_full()) {
        r.element_witness = d.complement().least_element();
        return r;
      }
      r.holds = true;
      return r;
    }
    case OrderPredicate::ideal: {
      if (a.empty()) {
        r.reason = "empty";
        return r;
      }
      PredicateResult seg = order_predicate(q, a, OrderPredicate::initial_segment);
      if (!seg.holds) {
        r.element_witness = seg.element_witness;
        r.reason = "not an initial segment";
        return r;
      }
      for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
          if (!upper_bound_within(q, a, elems[i], elems[j])) {
            r.pair_witness = {elems[i], elems[j]};
            r.reason = "not up-directed";
            return r;
          }
      r.holds = true;
      return r;
    }
    case OrderPredicate::up_independent: {
      for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
          if (compatible(q, elems[i], elems[j])) {
            r.pair_witness = {elems[i], elems[j]};
            return r;
          }
      r.holds = true;
      return r;
    }
    case OrderPredicate::consistent: {
      for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
          if (!compatible(q, elems[i], elems[j])) {
            r.pair_witness = {elems[i], elems[j]};
            return r;
          }
      r.holds = true;
      return r;
    }
  }
  return r;
}

Quotient quotient(const QuasiOrder& q) {
  const int n = q.size();
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  std::vector<SubsetMask> classes;
  for (int x = 0; x < n; ++x) {
    if (class_of[static_cast<std::size_t>(x)] >= 0) continue;
    SubsetMask members = q.below(x) & q.above(x); // mutual-≤ class of x
    int id = static_cast<int>(classes.size());
    classes.push_back(members);
    for (int y : members.elements()) class_of[static_cast<std::size_t>(y)] = id;
  }
  const int m = static_cast<int>(classes.size());
  std::vector<SubsetMask> below(static_cast<std::size_t>(m), SubsetMask::empty_set(m));
  for (int j = 0; j < m; ++j) {
    int rep_j = classes[static_cast<std::size_t>(j)].least_element();
    for (int i = 0; i < m; ++i) {
      int rep_i = classes[static_cast<std::size_t>(i)].least_element();
      if (q.leq(rep_i, rep_j)) below[static_cast<std::size_t>(j)] = below[static_cast<std::size_t>(j)].with(i);
    }
  }
  return Quotient{Poset(QuasiOrder::from_below_rows(std::move(below))), std::move(class_of),
                  std::move(classes)};
}

SubsetMask well_founded_cofinal(const QuasiOrder& q) {
  const int n = q.size();
  SubsetMask out = SubsetMask::empty_set(n);
  for (int x = 0; x < n; ++x) {
    // x represents a maximal class if nothing lies strictly above it and it
    // is the least member of its class.
    bool maximal = true;
    for (int y : q.above(x).elements())
      if (q.strictly_less(x, y)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    if ((q.below(x) & q.above(x)).least_element() == x) out = out.with(x);
  }
  return out;
}

DownsetLattice fg_initial_segments(const Poset& p, const Limits& limits) {
  const QuasiOrder& q = p.order();
  limits.charge_subsets(q.size(), "fg_initial_segments");
  DownsetLattice out;
  for_each_mask(q.size(), [&](SubsetMask m) {
    if (q.down(m) == m) out.downsets.push_back(m);
  });
  limits.charge(static_cast<std::uint64_t>(out.downsets.size()) * out.downsets.size(),
                "fg_initial_segments chain length");
  // Longest chain by DP over the containment order; downsets are already
  // sorted ascending by mask value, so every subset precedes its supersets.
  std::vector<int> len(out.downsets.size(), 1);
  for (std::size_t i = 0; i < out.downsets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out.downsets[j].proper_subset_of(out.downsets[i]))
        len[i] = std::max(len[i], len[j] + 1);
  for (int l : len) out.longest_chain = std::max(out.longest_chain, l);
  return out;
}

std::vector<int> greedy_generating_sequence(const ClosureSystem& s,
                                            const std::vector<int>& order) {
  const int n = s.size();
  if (static_cast<int>(order.size()) != n)
    throw InputError("enumeration must be a permutation of the ground set");
  SubsetMask seen = SubsetMask::empty_set(n);
  for (int e : order) {
    if (e < 0 || e >= n || seen.contains(e))
      throw InputError("enumeration must be a permutation of the ground set");
    seen = seen.with(e);
  }
  std::vector<int> picks;
  SubsetMask picked = SubsetMask::empty_set(n);
  while (true) {
    SubsetMask cl = s.closure(picked);
    int next = -1;
    for (int e : order)
      if (!cl.contains(e)) {
        next = e;
        break;
      }
    if (next < 0) break;
    picks.push_back(next);
    picked = picked.with(next);
  }
  return picks;
}

CorrespondenceReport correspondence_check(const Poset& p, const Limits& limits) {
  const int n = p.size();
  limits.charge_subsets(n, "correspondence_check");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  ClosureSystem s = ClosureSystem::alexandroff(std::move(labels), p.order());
  const std::vector<SubsetMask> family = closed_family(s, limits);

  CorrespondenceReport rep;
  for_each_mask(n, [&](SubsetMask a) {
    ++rep.subsets_checked;
    {
      bool antichain = order_predicate(p.order(), a, OrderPredicate::antichain).holds;
      IndependenceReport ir = independence_check(s, a, limits);
      bool discrete = ir.discrete.value_or(false);
      if (antichain != discrete)
        rep.violations.push_back({a, "antichain-discrete", antichain, discrete});
    }
    {
      bool cofinal = order_predicate(p.order(), a, OrderPredicate::cofinal).holds;
      bool dense = s.closure(a).is_full();
      if (cofinal != dense) rep.violations.push_back({a, "cofinal-dense", cofinal, dense});
    }
    {
      bool ideal = order_predicate(p.order(), a, OrderPredicate::ideal).holds;
      bool irred = s.is_closed(a) && is_irreducible(s, a, limits).irreducible;
      if (ideal != irred) rep.violations.push_back({a, "ideal-irreducible", ideal, irred});
    }
  });
  return rep;
}

} // namespace noecover
