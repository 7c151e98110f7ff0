#include "noecover/independence.hpp"

#include "noecover/errors.hpp"

namespace noecover {

bool is_independent(const ClosureSystem& s, SubsetMask x) {
  for (int e : x.elements())
    if (s.closure(x.without(e)).contains(e)) return false;
  return true;
}

IndependenceReport independence_check(const ClosureSystem& s, SubsetMask x, const Limits& limits) {
  IndependenceReport rep;
  rep.independent = true;
  for (int e : x.elements())
    if (s.closure(x.without(e)).contains(e)) {
      rep.independent = false;
      rep.violating_element = e;
      break;
    }
  rep.generating = s.closure(x).is_full();
  // Discreteness is only defined on topological systems; when deciding that
  // would blow the budget the flag is simply left unset.
  try {
    if (s.is_topological(limits)) {
      limits.charge_subsets(x.count(), "discreteness check");
      bool discrete = true;
      for_each_submask(x, [&](SubsetMask z) {
        if (!discrete) return;
        if ((s.closure(z) & x) != z) {
          discrete = false;
          rep.non_closed_witness = z;
        }
      });
      rep.discrete = discrete;
    }
  } catch (const LimitError&) {
  }
  return rep;
}

ExtremalSet max_independent(const ClosureSystem& s, const Limits& limits) {
  const int n = s.size();
  if (n > limits.max_ground) throw LimitError("max_independent: ground set too large");
  ExtremalSet best{SubsetMask::empty_set(n), 0};
  std::uint64_t nodes = 0;
  // Depth-first over element ids; independence is hereditary, so a dependent
  // prefix never extends. Ties are pruned only strictly, which keeps the
  // least mask among the maxima reachable.
  auto dfs = [&](auto&& self, int next, SubsetMask cur) -> void {
    limits.charge(++nodes, "max_independent search");
    if (cur.count() + (n - next) < best.size) return;
    if (next == n) {
      if (cur.count() > best.size || (cur.count() == best.size && cur < best.set))
        best = {cur, cur.count()};
      return;
    }
    SubsetMask grown = cur.with(next);
    if (is_independent(s, grown)) self(self, next + 1, grown);
    self(self, next + 1, cur);
  };
  dfs(dfs, 0, SubsetMask::empty_set(n));
  return best;
}

ExtremalSet min_generating(const ClosureSystem& s, const Limits& limits) {
  const int n = s.size();
  if (n > limits.max_ground) throw LimitError("min_generating: ground set too large");
  limits.charge_subsets(n, "min_generating search");
  // Subsets by cardinality, ascending mask within each size; the first
  // generating set found is the canonical minimum.
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      if (s.closure(SubsetMask::empty_set(n)).is_full()) return {SubsetMask::empty_set(n), 0};
      continue;
    }
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    const std::uint64_t end = std::uint64_t{1} << n;
    while (v < end) {
      SubsetMask x{static_cast<std::uint32_t>(v), n};
      if (s.closure(x).is_full()) return {x, k};
      std::uint64_t c = v & -v;
      std::uint64_t r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
    }
  }
  throw std::logic_error("min_generating: the full ground set must generate");
}

BooleanEmbedding boolean_embedding(const ClosureSystem& s, SubsetMask x, const Limits& limits) {
  if (!is_independent(s, x)) throw InputError("boolean_embedding requires an independent set");
  limits.charge_subsets(2 * x.count(), "boolean_embedding verification");
  BooleanEmbedding out;
  for_each_submask(x, [&](SubsetMask sub) { out.images.emplace_back(sub, s.closure(sub)); });
  out.verified = true;
  for (const auto& [a, ca] : out.images)
    for (const auto& [b, cb] : out.images)
      if (a.subset_of(b) != ca.subset_of(cb)) out.verified = false;
  return out;
}

} // namespace noecover
