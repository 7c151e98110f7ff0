#include "noecover/cover.hpp"

#include <algorithm>
#include <cassert>

namespace noecover {

std::optional<std::vector<SubsetMask>> exact_min_cover(SubsetMask universe,
                                                       const std::vector<SubsetMask>& candidates,
                                                       const Limits& limits, const char* what) {
  assert(std::is_sorted(candidates.begin(), candidates.end()));
  if (universe.empty()) return std::vector<SubsetMask>{};

  // Keep only useful candidates: nonempty subsets of the universe.
  std::vector<SubsetMask> cand;
  cand.reserve(candidates.size());
  for (SubsetMask c : candidates)
    if (!c.empty() && c.subset_of(universe)) cand.push_back(c);
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  const int m = static_cast<int>(cand.size());
  std::vector<SubsetMask> suffix_union(static_cast<std::size_t>(m) + 1,
                                       SubsetMask::empty_set(universe.width()));
  for (int i = m - 1; i >= 0; --i)
    suffix_union[static_cast<std::size_t>(i)] =
        suffix_union[static_cast<std::size_t>(i) + 1] | cand[static_cast<std::size_t>(i)];
  if (!universe.subset_of(suffix_union[0])) return std::nullopt;

  std::uint64_t nodes = 0;
  std::vector<int> chosen;
  // Iterative deepening; within a depth, combinations are tried in ascending
  // index order, so the first full cover found is the lexicographic minimum.
  auto dfs = [&](auto&& self, int start, SubsetMask covered, int slots) -> bool {
    limits.charge(++nodes, what);
    if (universe.subset_of(covered)) return true;
    if (slots == 0) return false;
    for (int i = start; i < m; ++i) {
      if (!universe.subset_of(covered | suffix_union[static_cast<std::size_t>(i)])) break;
      SubsetMask c = cand[static_cast<std::size_t>(i)];
      if (c.subset_of(covered)) continue;
      chosen.push_back(i);
      if (self(self, i + 1, covered | c, slots - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= m; ++k) {
    chosen.clear();
    if (dfs(dfs, 0, SubsetMask::empty_set(universe.width()), k)) {
      std::vector<SubsetMask> out;
      out.reserve(chosen.size());
      for (int i : chosen) out.push_back(cand[static_cast<std::size_t>(i)]);
      return out;
    }
  }
  return std::nullopt;
}

} // namespace noecover
