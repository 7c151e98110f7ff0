#include <doctest.h>

#include "noecover/errors.hpp"
#include "noecover/independence.hpp"
#include "noecover/irreducible.hpp"
#include "noecover/parse.hpp"
#include "support/fixtures.hpp"

using namespace noecover;
using namespace testsupport;

TEST_CASE("irreducibility by definition") {
  ClosureSystem sv3 = v3();
  CHECK(is_irreducible(sv3, parse_subset(sv3, "a,c")).irreducible);

  IrreducibilityResult whole = is_irreducible(sv3, sv3.full());
  CHECK_FALSE(whole.irreducible);
  REQUIRE(whole.split.has_value());
  CHECK(whole.split->first == parse_subset(sv3, "a,c"));
  CHECK(whole.split->second == parse_subset(sv3, "b,c"));

  IrreducibilityResult empty = is_irreducible(sv3, SubsetMask::empty_set(3));
  CHECK_FALSE(empty.irreducible);
  CHECK(empty.reason == "empty");

  CHECK_THROWS_AS(is_irreducible(sv3, parse_subset(sv3, "a")), InputError); // not closed
}

TEST_CASE("irreducible enumeration on the fixtures") {
  ClosureSystem sv3 = v3(), sm3 = m3(), sch3 = ch3();
  CHECK(enumerate_irreducibles(sv3) ==
        std::vector<SubsetMask>{parse_subset(sv3, "c"), parse_subset(sv3, "a,c"),
                                parse_subset(sv3, "b,c")});
  CHECK(enumerate_irreducibles(sm3) ==
        std::vector<SubsetMask>{parse_subset(sm3, "x"), parse_subset(sm3, "x,y"),
                                parse_subset(sm3, "x,z")});
  // the whole chain is irreducible: no two proper closed subsets cover it
  CHECK(enumerate_irreducibles(sch3) ==
        std::vector<SubsetMask>{parse_subset(sch3, "a"), parse_subset(sch3, "a,b"),
                                parse_subset(sch3, "a,b,c")});
}

TEST_CASE("decompose on the fixtures") {
  ClosureSystem sv3 = v3(), sch3 = ch3();
  Decomposition dv3 = decompose(sv3, sv3.full(), DecomposeStrategy::min);
  CHECK(dv3.parts ==
        std::vector<SubsetMask>{parse_subset(sv3, "a,c"), parse_subset(sv3, "b,c")});
  Decomposition dch3 = decompose(sch3, sch3.full(), DecomposeStrategy::min);
  CHECK(dch3.parts == std::vector<SubsetMask>{sch3.full()});
  CHECK(decompose(sv3, SubsetMask::empty_set(3), DecomposeStrategy::min).parts.empty());
  CHECK(decompose(sv3, SubsetMask::empty_set(3), DecomposeStrategy::noether).parts.empty());
  CHECK_THROWS_AS(decompose(sv3, parse_subset(sv3, "a"), DecomposeStrategy::min), InputError);
}

TEST_CASE("every closed set of every suite system decomposes under every strategy") {
  for (const ClosureSystem& s : small_suite()) {
    if (s.size() > 6) continue;
    DecomposeContext ctx = make_decompose_context(s);
    for (SubsetMask c : ctx.family) {
      for (DecomposeStrategy strategy :
           {DecomposeStrategy::min, DecomposeStrategy::components, DecomposeStrategy::noether}) {
        Decomposition d = decompose_in(ctx, c, strategy);
        SubsetMask u = SubsetMask::empty_set(s.size());
        for (SubsetMask part : d.parts) {
          CHECK(is_irreducible_in(ctx, part).irreducible);
          CHECK(part.subset_of(c));
          u = u | part;
        }
        CHECK(u == c);
        if (strategy != DecomposeStrategy::noether)
          for (std::size_t i = 0; i < d.parts.size(); ++i)
            for (std::size_t j = i + 1; j < d.parts.size(); ++j) {
              CHECK_FALSE(d.parts[i].subset_of(d.parts[j]));
              CHECK_FALSE(d.parts[j].subset_of(d.parts[i]));
            }
      }
    }
  }
}

TEST_CASE("on topological systems the irreducibles are the point closures") {
  for (const ClosureSystem& s : small_suite()) {
    if (s.size() > 6 || !s.is_topological()) continue;
    DecomposeContext ctx = make_decompose_context(s);
    for (SubsetMask c : ctx.family) {
      if (c.empty()) continue;
      bool is_point_closure = false;
      for (int e = 0; e < s.size(); ++e)
        if (s.closure(SubsetMask::empty_set(s.size()).with(e)) == c) is_point_closure = true;
      CHECK(is_irreducible_in(ctx, c).irreducible == is_point_closure);
    }
  }
}

TEST_CASE("min and components agree on topological systems") {
  for (const ClosureSystem& s : small_suite()) {
    if (s.size() > 6 || !s.is_topological()) continue;
    DecomposeContext ctx = make_decompose_context(s);
    for (SubsetMask c : ctx.family)
      CHECK(decompose_in(ctx, c, DecomposeStrategy::min).parts ==
            decompose_in(ctx, c, DecomposeStrategy::components).parts);
  }
}

TEST_CASE("a discrete set meets each component at most once") {
  for (const ClosureSystem& s : small_suite()) {
    if (s.size() > 5 || !s.is_topological()) continue;
    DecomposeContext ctx = make_decompose_context(s);
    for_each_mask(s.size(), [&](SubsetMask x) {
      if (!is_independent(s, x)) return;
      Decomposition d = decompose_in(ctx, s.closure(x), DecomposeStrategy::components);
      CHECK(x.count() <= static_cast<int>(d.parts.size()));
    });
  }
}

TEST_CASE("decompositions report both size statistics") {
  for (const ClosureSystem& s : small_suite()) {
    if (s.size() > 5) continue;
    DecomposeContext ctx = make_decompose_context(s);
    for (SubsetMask c : ctx.family) {
      Decomposition mn = decompose_in(ctx, c, DecomposeStrategy::min);
      Decomposition cp = decompose_in(ctx, c, DecomposeStrategy::components);
      CHECK(mn.min_size == static_cast<int>(mn.parts.size()));
      CHECK(cp.components_size == static_cast<int>(cp.parts.size()));
      CHECK(mn.components_size == cp.components_size);
      CHECK(mn.min_size <= cp.components_size);
    }
  }
}
