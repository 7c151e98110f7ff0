#include <doctest.h>

#include "noecover/errors.hpp"
#include "noecover/gmp.hpp"
#include "noecover/irreducible.hpp"
#include "noecover/parse.hpp"
#include "support/fixtures.hpp"

using namespace noecover;
using namespace testsupport;

TEST_CASE("construction on the fixtures") {
  ClosureSystem sv3 = v3();
  GMPDecomposition dv3 = gmp_construct(sv3);
  REQUIRE(dv3.blocks.size() == 2);
  CHECK(dv3.blocks[0].elements == parse_subset(sv3, "a"));
  CHECK(dv3.blocks[1].elements == parse_subset(sv3, "b"));
  CHECK(dv3.blocks[0].ideal.kind == IdealDescriptor::Kind::explicit_sets);
  CHECK(dv3.blocks[0].ideal.sets == std::vector<SubsetMask>{SubsetMask::empty_set(3)});

  ClosureSystem sch3 = ch3();
  GMPDecomposition dch3 = gmp_construct(sch3);
  REQUIRE(dch3.blocks.size() == 1);
  CHECK(dch3.blocks[0].elements == sch3.full());
  CHECK(dch3.blocks[0].ideal.sets ==
        std::vector<SubsetMask>{SubsetMask(0, 3), SubsetMask(1, 3), SubsetMask(2, 3),
                                SubsetMask(3, 3)}); // ∅,{a},{b},{a,b}

  CHECK_THROWS_AS(gmp_construct(m3()), InputError); // not topological
}

TEST_CASE("verification of the star condition") {
  ClosureSystem sv3 = v3();
  CHECK(gmp_verify(sv3, gmp_construct(sv3)).ok);
  CHECK(gmp_verify(ch3(), gmp_construct(ch3())).ok);

  // Replacing N_1 by all of P({a}) makes it improper and breaks (*): {a,b}
  // generates although its trace {a} lies in the doctored ideal.
  GMPDecomposition doctored = parse_decomposition(sv3, "A=a N=-;a | A=b N=-");
  GMPVerifyResult bad = gmp_verify(sv3, doctored);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.counterexample.has_value());
  CHECK(*bad.counterexample == parse_subset(sv3, "a,b"));

  // An ideal-sound but wrong decomposition yields a counterexample subset.
  GMPDecomposition wrong = parse_decomposition(sv3, "A=a,b N=-");
  GMPVerifyResult cx = gmp_verify(sv3, wrong);
  CHECK_FALSE(cx.ok);
  REQUIRE(cx.counterexample.has_value());
  CHECK(*cx.counterexample == parse_subset(sv3, "a")); // {a} alone does not generate
}

TEST_CASE("degenerate inputs are rejected with details") {
  ClosureSystem sv3 = v3();
  CHECK(gmp_verify(sv3, GMPDecomposition{}).detail == "decomposition has no blocks");
  GMPDecomposition overlap = parse_decomposition(sv3, "A=a,b N=- | A=b N=-");
  CHECK(gmp_verify(sv3, overlap).detail == "blocks are not pairwise disjoint");
  // On a non-topological system the family forced by (*) need not be
  // union-closed, so the ideal re-validation still rejects it.
  ClosureSystem sm3 = m3();
  GMPDecomposition forced = parse_decomposition(sm3, "A=y,z N=-;y;z");
  GMPVerifyResult r = gmp_verify(sm3, forced);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.counterexample.has_value()); // (*) itself holds
  CHECK(r.detail == "block {y,z}: ideal is not closed under the union {y,z}");
}

TEST_CASE("normalization shrinks overlapping closures and is idempotent") {
  // Poset {a,b,c} with c ≤ a only.
  ClosureSystem s = make_system("system preorder\nelements a b c\nle c a\n");
  GMPDecomposition d = parse_decomposition(s, "A=a N=- | A=b,c N=-;c");
  CHECK(gmp_verify(s, d).ok);
  CHECK_FALSE(eq1_holds(s, d)); // {b,c} meets φ({a}) = {a,c}
  GMPDecomposition norm = gmp_normalize(s, d);
  REQUIRE(norm.blocks.size() == 2);
  CHECK(norm.blocks[0].elements == parse_subset(s, "a"));
  CHECK(norm.blocks[1].elements == parse_subset(s, "b"));
  CHECK(norm.blocks[1].ideal.sets == std::vector<SubsetMask>{SubsetMask::empty_set(3)});
  CHECK(eq1_holds(s, norm));
  CHECK(gmp_verify(s, norm).ok);

  GMPDecomposition twice = gmp_normalize(s, norm);
  REQUIRE(twice.blocks.size() == norm.blocks.size());
  for (std::size_t i = 0; i < norm.blocks.size(); ++i)
    CHECK(twice.blocks[i].elements == norm.blocks[i].elements);

  GMPDecomposition broken = parse_decomposition(s, "A=a N=-;a");
  CHECK_THROWS_AS(gmp_normalize(s, broken), InputError);
}

TEST_CASE("the ideal characterization and recovered irreducibles") {
  ClosureSystem sv3 = v3();
  Claim1Report rep = claim1_check(sv3, gmp_construct(sv3));
  CHECK(rep.ok());
  REQUIRE(rep.blocks.size() == 2);
  CHECK(rep.blocks[0].closure_of_block == parse_subset(sv3, "a,c"));
  CHECK(rep.blocks[0].irreducible);

  ClosureSystem s = make_system("system preorder\nelements a b c\nle c a\n");
  GMPDecomposition norm =
      gmp_normalize(s, parse_decomposition(s, "A=a N=- | A=b,c N=-;c"));
  Claim1Report rep2 = claim1_check(s, norm);
  CHECK(rep2.ok()); // N'_1 over {a} is exactly {∅}

  GMPDecomposition unnormalized = parse_decomposition(s, "A=a N=- | A=b,c N=-;c");
  CHECK_THROWS_WITH_AS(claim1_check(s, unnormalized), doctest::Contains("gmp_normalize"),
                       InputError);
}

TEST_CASE("constructed decompositions satisfy the whole pipeline suite-wide") {
  for (const ClosureSystem& s : small_suite()) {
    if (s.size() > 6 || !s.is_topological()) continue;
    GMPDecomposition d = gmp_construct(s);
    CHECK(gmp_verify(s, d).ok);
    CHECK(eq1_holds(s, d)); // Claim-2 outputs need no normalization
    CHECK(claim1_check(s, d).ok());
    CHECK(d.blocks.size() ==
          decompose(s, s.full(), DecomposeStrategy::min).parts.size());
    GMPDecomposition norm = gmp_normalize(s, d);
    REQUIRE(norm.blocks.size() == d.blocks.size());
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
      CHECK(norm.blocks[i].elements == d.blocks[i].elements);
  }
}

TEST_CASE("implicit and explicit ideals agree on membership") {
  ClosureSystem sch3 = ch3();
  GMPDecomposition d = gmp_construct(sch3);
  REQUIRE(d.blocks.size() == 1);
  GMPBlock implicit_block = d.blocks[0];
  implicit_block.ideal.kind = IdealDescriptor::Kind::implicit;
  implicit_block.ideal.target = sch3.closure(implicit_block.elements);
  for_each_submask(implicit_block.elements, [&](SubsetMask y) {
    CHECK(in_ideal(sch3, d.blocks[0], y) == in_ideal(sch3, implicit_block, y));
  });
}
