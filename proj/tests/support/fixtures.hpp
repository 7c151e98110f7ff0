#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "noecover/parse.hpp"
#include "noecover/system.hpp"

namespace testsupport {

using namespace noecover;

inline ClosureSystem make_system(const std::string& text, const std::string& name = "test",
                                 BuildOptions options = {}) {
  return build_system(parse_system(text, name), options);
}

inline ClosureSystem v3() {
  return make_system("system preorder\nelements a b c\nle c a\nle c b\n", "v3");
}

inline ClosureSystem ch3() {
  return make_system("system preorder\nelements a b c\nle a b\nle b c\n", "ch3");
}

inline ClosureSystem m3() {
  return make_system(
      "system moore\nelements x y z\nclosed x\nclosed x y\nclosed x z\nclosed x y z\n", "m3");
}

inline ClosureSystem pu2() { return make_system("system powerset-union\npowerset-union 2\n", "pu2"); }
inline ClosureSystem pu3() { return make_system("system powerset-union\npowerset-union 3\n", "pu3"); }

inline std::vector<ClosureSystem> fixture_suite() {
  std::vector<ClosureSystem> out;
  out.push_back(v3());
  out.push_back(ch3());
  out.push_back(m3());
  out.push_back(pu2());
  out.push_back(pu3());
  return out;
}

inline std::vector<std::string> generic_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

// Closes a family under pairwise intersections and adds the full set.
inline std::vector<SubsetMask> moore_closure(int n, std::vector<SubsetMask> family) {
  family.push_back(SubsetMask::full_set(n));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t sz = family.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i + 1; j < sz; ++j) {
        SubsetMask meet = family[i] & family[j];
        if (!std::binary_search(family.begin(), family.end(), meet)) {
          family.insert(std::lower_bound(family.begin(), family.end(), meet), meet);
          grew = true;
        }
      }
  }
  return family;
}

// Every intersection-closed family containing the full set on a 3-element
// ground set, enumerated by filtering all subsets of the powerset.
inline std::vector<std::vector<SubsetMask>> all_moore_families_3() {
  std::vector<std::vector<SubsetMask>> out;
  for (int pick = 0; pick < 256; ++pick) {
    if (!(pick & 0x80)) continue; // must contain the full set {0,1,2} = mask 7
    std::vector<SubsetMask> family;
    for (int m = 0; m < 8; ++m)
      if ((pick >> m) & 1) family.emplace_back(static_cast<std::uint32_t>(m), 3);
    bool closed = true;
    for (std::size_t i = 0; i < family.size() && closed; ++i)
      for (std::size_t j = i + 1; j < family.size() && closed; ++j)
        if (!std::binary_search(family.begin(), family.end(), family[i] & family[j]))
          closed = false;
    if (closed) out.push_back(std::move(family));
  }
  return out;
}

// Deterministic random Moore systems; mt19937 output is pinned by the
// standard, so the suite is identical everywhere.
inline std::vector<ClosureSystem> random_moore_suite(int count, unsigned seed, int max_n = 6) {
  std::mt19937 gen(seed);
  std::vector<ClosureSystem> out;
  for (int i = 0; i < count; ++i) {
    int n = 1 + static_cast<int>(gen() % static_cast<unsigned>(max_n));
    int picks = 1 + static_cast<int>(gen() % 5u);
    std::vector<SubsetMask> family;
    for (int k = 0; k < picks; ++k)
      family.emplace_back(static_cast<std::uint32_t>(gen() & ((1u << n) - 1)), n);
    out.push_back(ClosureSystem::moore(generic_labels(n), moore_closure(n, std::move(family))));
  }
  return out;
}

// All labeled posets on n elements, as below-row vectors.
inline std::vector<QuasiOrder> all_posets(int n) {
  std::vector<QuasiOrder> out;
  const int pairs = n * (n - 1);
  std::vector<std::pair<int, int>> index;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) index.emplace_back(x, y);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    std::vector<SubsetMask> below(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) below[static_cast<std::size_t>(i)] = SubsetMask::empty_set(n).with(i);
    for (int b = 0; b < pairs; ++b)
      if ((code >> b) & 1) {
        auto [x, y] = index[static_cast<std::size_t>(b)];
        below[static_cast<std::size_t>(y)] = below[static_cast<std::size_t>(y)].with(x);
      }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = x + 1; y < n && ok; ++y)
        if (below[static_cast<std::size_t>(y)].contains(x) &&
            below[static_cast<std::size_t>(x)].contains(y))
          ok = false; // antisymmetry
    for (int y = 0; y < n && ok; ++y)
      for (int x : below[static_cast<std::size_t>(y)].elements())
        if (!below[static_cast<std::size_t>(x)].subset_of(below[static_cast<std::size_t>(y)])) {
          ok = false; // transitivity
          break;
        }
    if (ok) out.push_back(QuasiOrder::from_below_rows(std::move(below)));
  }
  return out;
}

// Systems the suite-wide invariants run over in the unit tests; kept small so
// the unit suite stays quick. The acceptance suite uses larger collections.
inline std::vector<ClosureSystem> small_suite() {
  std::vector<ClosureSystem> out = fixture_suite();
  for (const auto& family : all_moore_families_3())
    out.push_back(ClosureSystem::moore(generic_labels(3), family));
  for (ClosureSystem& s : random_moore_suite(25, 20240817u, 5)) out.push_back(std::move(s));
  return out;
}

} // namespace testsupport
