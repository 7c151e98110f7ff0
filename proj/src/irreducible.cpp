#include "noecover/irreducible.hpp"

#include <algorithm>

#include "noecover/cover.hpp"
#include "noecover/errors.hpp"

namespace noecover {

const char* decompose_strategy_name(DecomposeStrategy s) {
  switch (s) {
    case DecomposeStrategy::min: return "min";
    case DecomposeStrategy::components: return "components";
    case DecomposeStrategy::noether: return "noether";
  }
  return "?";
}

std::optional<DecomposeStrategy> decompose_strategy_from_name(const std::string& name) {
  for (DecomposeStrategy s :
       {DecomposeStrategy::min, DecomposeStrategy::components, DecomposeStrategy::noether})
    if (name == decompose_strategy_name(s)) return s;
  return std::nullopt;
}

namespace {

IrreducibilityResult irreducible_against(const std::vector<SubsetMask>& family, SubsetMask c) {
  IrreducibilityResult r;
  if (c.empty()) {
    r.reason = "empty";
    return r;
  }
  std::vector<SubsetMask> propers;
  for (SubsetMask f : family)
    if (f.proper_subset_of(c)) propers.push_back(f);
  for (std::size_t i = 0; i < propers.size(); ++i)
    for (std::size_t j = i + 1; j < propers.size(); ++j)
      if ((propers[i] | propers[j]) == c) {
        r.split = {propers[i], propers[j]};
        return r;
      }
  r.irreducible = true;
  return r;
}

} // namespace

DecomposeContext make_decompose_context(const ClosureSystem& s, const Limits& limits) {
  DecomposeContext ctx;
  ctx.family = closed_family(s, limits);
  limits.charge(static_cast<std::uint64_t>(ctx.family.size()) * ctx.family.size(),
                "irreducibility enumeration");
  for (SubsetMask c : ctx.family)
    if (irreducible_against(ctx.family, c).irreducible) ctx.irreducibles.push_back(c);
  return ctx;
}

IrreducibilityResult is_irreducible_in(const DecomposeContext& ctx, SubsetMask c) {
  if (!std::binary_search(ctx.family.begin(), ctx.family.end(), c))
    throw InputError("is_irreducible requires a closed set");
  return irreducible_against(ctx.family, c);
}

IrreducibilityResult is_irreducible(const ClosureSystem& s, SubsetMask c, const Limits& limits) {
  if (!s.is_closed(c)) throw InputError("is_irreducible requires a closed set");
  return irreducible_against(closed_family(s, limits), c);
}

std::vector<SubsetMask> enumerate_irreducibles(const ClosureSystem& s, const Limits& limits) {
  return make_decompose_context(s, limits).irreducibles;
}

Decomposition decompose_in(const DecomposeContext& ctx, SubsetMask c, DecomposeStrategy strategy,
                           const Limits& limits) {
  if (!std::binary_search(ctx.family.begin(), ctx.family.end(), c))
    throw InputError("decompose requires a closed set");

  std::vector<SubsetMask> inside;
  for (SubsetMask i : ctx.irreducibles)
    if (i.subset_of(c)) inside.push_back(i);

  std::vector<SubsetMask> components;
  for (SubsetMask i : inside) {
    bool maximal = true;
    for (SubsetMask j : inside)
      if (i.proper_subset_of(j)) {
        maximal = false;
        break;
      }
    if (maximal) components.push_back(i);
  }

  auto min_parts = exact_min_cover(c, inside, limits, "decompose(min)");
  if (!min_parts)
    throw std::logic_error("decompose: every closed set splits into irreducibles at finite size");

  Decomposition d;
  d.target = c;
  d.strategy = strategy;
  d.min_size = static_cast<int>(min_parts->size());
  d.components_size = static_cast<int>(components.size());
  switch (strategy) {
    case DecomposeStrategy::min: d.parts = std::move(*min_parts); break;
    case DecomposeStrategy::components: d.parts = std::move(components); break;
    case DecomposeStrategy::noether: {
      // Split along the least pair of proper closed covers until everything
      // is irreducible; strictly shrinking, so it terminates.
      std::vector<SubsetMask> parts;
      auto rec = [&](auto&& self, SubsetMask t) -> void {
        if (t.empty()) return;
        IrreducibilityResult r = irreducible_against(ctx.family, t);
        if (r.irreducible) {
          parts.push_back(t);
          return;
        }
        self(self, r.split->first);
        self(self, r.split->second);
      };
      rec(rec, c);
      std::sort(parts.begin(), parts.end());
      parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
      // Irredundant pruning, least mask first.
      bool removed = true;
      while (removed) {
        removed = false;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          SubsetMask rest = SubsetMask::empty_set(c.width());
          for (std::size_t j = 0; j < parts.size(); ++j)
            if (j != i) rest = rest | parts[j];
          if (rest == c) {
            parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
            removed = true;
            break;
          }
        }
      }
      d.parts = std::move(parts);
      break;
    }
  }
  return d;
}

Decomposition decompose(const ClosureSystem& s, SubsetMask c, DecomposeStrategy strategy,
                        const Limits& limits) {
  return decompose_in(make_decompose_context(s, limits), c, strategy, limits);
}

} // namespace noecover
