#include "noecover/minmax.hpp"

#include <algorithm>
#include <cassert>

#include "noecover/cover.hpp"
#include "noecover/errors.hpp"

namespace noecover {

QURPartition qur_partition(const Poset& p) {
  const QuasiOrder& q = p.order();
  const int n = q.size();
  SubsetMask qm = SubsetMask::empty_set(n);
  for (int x = 0; x < n; ++x) {
    bool directed = true;
    const std::vector<int> ups = q.above(x).elements();
    for (std::size_t i = 0; i < ups.size() && directed; ++i)
      for (std::size_t j = i + 1; j < ups.size() && directed; ++j)
        if ((q.above(ups[i]) & q.above(ups[j])).empty()) directed = false;
    if (directed) qm = qm.with(x);
  }
  QURPartition part{qm, q.down(qm), q.down(qm).complement()};
  assert(part.r.empty()); // every finite poset sits below its maximal elements
  return part;
}

namespace {

bool consistent_set(const QuasiOrder& q, SubsetMask a) {
  const std::vector<int> elems = a.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if ((q.above(elems[i]) & q.above(elems[j])).empty()) return false;
  return true;
}

SubsetMask max_up_independent_set(const QuasiOrder& q, const Limits& limits) {
  const int n = q.size();
  std::vector<SubsetMask> compat(static_cast<std::size_t>(n), SubsetMask::empty_set(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!(q.above(x) & q.above(y)).empty()) compat[static_cast<std::size_t>(x)] =
          compat[static_cast<std::size_t>(x)].with(y);
  SubsetMask best = SubsetMask::empty_set(n);
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, int next, SubsetMask cur) -> void {
    limits.charge(++nodes, "max up-independent search");
    if (cur.count() + (n - next) < best.count()) return;
    if (next == n) {
      if (cur.count() > best.count() || (cur.count() == best.count() && cur < best)) best = cur;
      return;
    }
    if ((compat[static_cast<std::size_t>(next)] & cur).empty()) self(self, next + 1, cur.with(next));
    self(self, next + 1, cur);
  };
  dfs(dfs, 0, SubsetMask::empty_set(n));
  return best;
}

std::vector<SubsetMask> principal_ideals(const QuasiOrder& q) {
  std::vector<SubsetMask> out;
  for (int x = 0; x < q.size(); ++x) out.push_back(q.below(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

MinMaxReport minmax_report(const Poset& p, const Limits& limits) {
  const QuasiOrder& q = p.order();
  const int n = q.size();
  MinMaxReport rep;

  rep.up_independent_witness = max_up_independent_set(q, limits);
  rep.max_up_independent = rep.up_independent_witness.count();

  auto ideal_cover = exact_min_cover(SubsetMask::full_set(n), principal_ideals(q), limits,
                                     "ideal cover search");
  if (!ideal_cover) throw std::logic_error("principal ideals always cover a finite poset");
  rep.ideal_cover = std::move(*ideal_cover);

  limits.charge_subsets(n, "consistent-set enumeration");
  std::vector<SubsetMask> consistent;
  for_each_mask(n, [&](SubsetMask a) {
    if (!a.empty() && consistent_set(q, a)) consistent.push_back(a);
  });
  std::vector<SubsetMask> maximal;
  for (SubsetMask a : consistent) {
    bool is_max = true;
    for (SubsetMask b : consistent)
      if (a.proper_subset_of(b)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(a);
  }
  auto cons_cover =
      exact_min_cover(SubsetMask::full_set(n), maximal, limits, "consistent cover search");
  if (!cons_cover) throw std::logic_error("singletons are consistent, so a cover exists");
  rep.consistent_cover = std::move(*cons_cover);

  rep.equal = rep.max_up_independent == static_cast<int>(rep.ideal_cover.size()) &&
              rep.max_up_independent == static_cast<int>(rep.consistent_cover.size());

  // Certificates must survive the definitional predicates.
  if (!order_predicate(q, rep.up_independent_witness, OrderPredicate::up_independent).holds)
    throw std::logic_error("up-independent witness failed re-validation");
  for (SubsetMask i : rep.ideal_cover)
    if (!order_predicate(q, i, OrderPredicate::ideal).holds)
      throw std::logic_error("ideal-cover member failed re-validation");
  for (SubsetMask c : rep.consistent_cover)
    if (!order_predicate(q, c, OrderPredicate::consistent).holds)
      throw std::logic_error("consistent-cover member failed re-validation");
  return rep;
}

std::vector<SubsetMask> ideal_decompose_downset(const Poset& p, SubsetMask a,
                                                const Limits& limits) {
  const QuasiOrder& q = p.order();
  if (!order_predicate(q, a, OrderPredicate::initial_segment).holds)
    throw InputError("ideal_decompose_downset requires an initial segment");
  // Ideals of the subposet A are its principal down-sets, and A is down-closed,
  // so they are ↓x taken in P.
  std::vector<SubsetMask> candidates;
  for (int x : a.elements()) candidates.push_back(q.below(x));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  auto cover = exact_min_cover(a, candidates, limits, "downset ideal cover");
  if (!cover) throw std::logic_error("principal ideals cover every initial segment");
  return *cover;
}

} // namespace noecover
