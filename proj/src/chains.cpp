#include "noecover/chains.hpp"

#include <algorithm>

#include "noecover/errors.hpp"
#include "noecover/independence.hpp"

namespace noecover {

ClosedChain make_chain(const ClosureSystem& s, std::vector<SubsetMask> sets) {
  if (sets.empty()) throw InputError("a chain needs at least one member");
  for (SubsetMask m : sets)
    if (!s.is_closed(m))
      throw InputError("chain member " + set_to_string(s, m) + " is not closed");
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (!sets[i].proper_subset_of(sets[i - 1]))
      throw InputError("chain must be strictly descending");
  return ClosedChain{std::move(sets)};
}

const char* separation_mode_name(SeparationMode m) {
  return m == SeparationMode::full ? "full" : "to-depth";
}

std::optional<SeparationMode> separation_mode_from_name(const std::string& name) {
  if (name == "full") return SeparationMode::full;
  if (name == "to-depth") return SeparationMode::to_depth;
  return std::nullopt;
}

namespace {

// Submasks of `domain` ordered by cardinality, then mask value.
std::vector<SubsetMask> submasks_by_size(SubsetMask domain) {
  std::vector<SubsetMask> out;
  for_each_submask(domain, [&](SubsetMask f) { out.push_back(f); });
  std::stable_sort(out.begin(), out.end(), [](SubsetMask a, SubsetMask b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

} // namespace

SeparatingVerdict is_separating(const ClosureSystem& s, const ClosedChain& chain,
                                SeparationMode mode, const Limits& limits) {
  const int last = mode == SeparationMode::full ? chain.depth() : chain.depth() - 1;
  SeparatingVerdict v{mode, true, std::nullopt};
  for (int m = 1; m <= last; ++m) {
    const SubsetMask im = chain.sets[static_cast<std::size_t>(m)];
    const SubsetMask domain = chain.sets[0] - im;
    limits.charge_subsets(domain.count(), "is_separating");
    for (SubsetMask f : submasks_by_size(domain)) {
      bool separated = false;
      for (auto j = chain.sets.rbegin(); j != chain.sets.rend(); ++j)
        if (!im.subset_of(s.closure(f | *j))) {
          separated = true;
          break;
        }
      if (!separated) {
        v.separating = false;
        v.failure = {m, f};
        return v;
      }
    }
  }
  return v;
}

ChainConstruction chain_from_independent(const ClosureSystem& s, SubsetMask x,
                                         ChainAmbient ambient, const Limits& limits) {
  if (!is_independent(s, x)) throw InputError("chain_from_independent requires an independent set");
  ClosureSystem ambient_sys = [&] {
    if (ambient == ChainAmbient::induced_on_x) return induce(s, x);
    if (!s.is_topological(limits))
      throw InputError("whole-space chains require a topological closure");
    return s;
  }();
  const SubsetMask x_local = ambient == ChainAmbient::induced_on_x
                                 ? SubsetMask::full_set(ambient_sys.size())
                                 : x;
  const std::vector<int> order = x_local.elements();
  std::vector<SubsetMask> sets;
  SubsetMask remaining = x_local;
  sets.push_back(ambient_sys.closure(remaining));
  for (int e : order) {
    remaining = remaining.without(e);
    SubsetMask next = ambient_sys.closure(remaining);
    if (next != sets.back()) sets.push_back(next); // merge accidental repeats
  }
  return ChainConstruction{std::move(ambient_sys), ClosedChain{std::move(sets)}};
}

SubsetMask independent_from_separating(const ClosureSystem& s, const ClosedChain& chain,
                                       const Limits& limits) {
  if (chain.sets.size() < 2)
    throw InputError("extraction needs a chain with at least two members");
  SubsetMask cur = chain.sets[1];
  SubsetMask picked = SubsetMask::empty_set(s.size());
  picked = picked.with((chain.sets[0] - cur).least_element());
  std::uint64_t steps = 0;
  while (true) {
    limits.charge(++steps, "independent_from_separating");
    std::optional<std::pair<SubsetMask, int>> found; // (J, witness point)
    for (auto j = chain.sets.rbegin(); j != chain.sets.rend(); ++j) {
      SubsetMask cl = s.closure(picked | *j);
      if (!cur.subset_of(cl)) {
        found = {*j, (cur - cl).least_element()};
        break;
      }
    }
    if (!found) break;
    picked = picked.with(found->second);
    cur = found->first;
  }
  if (!is_independent(s, picked))
    throw std::logic_error("extracted set failed the independence re-check");
  return picked;
}

std::optional<std::pair<int, SubsetMask>> nonseparating_witness(const ClosureSystem& s,
                                                                const ClosedChain& chain,
                                                                const Limits& limits) {
  if (!s.is_topological(limits))
    throw InputError("nonseparating_witness requires a topological closure");
  if (chain.sets.size() < 2)
    throw InputError("nonseparating_witness needs a chain with at least two members");
  for (int m = 1; m <= chain.depth(); ++m) {
    const SubsetMask im = chain.sets[static_cast<std::size_t>(m)];
    const SubsetMask domain = chain.sets[0] - im;
    limits.charge_subsets(domain.count(), "nonseparating_witness");
    for (SubsetMask f : submasks_by_size(domain)) {
      const SubsetMask cf = s.closure(f);
      bool covers_all = true;
      for (SubsetMask j : chain.sets)
        if (!im.subset_of(cf | j)) {
          covers_all = false;
          break;
        }
      if (covers_all) return std::make_pair(m, f);
    }
  }
  return std::nullopt;
}

} // namespace noecover
