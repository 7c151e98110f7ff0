#include <doctest.h>

#include "noecover/chains.hpp"
#include "noecover/errors.hpp"
#include "noecover/independence.hpp"
#include "noecover/parse.hpp"
#include "support/fixtures.hpp"

using namespace noecover;
using namespace testsupport;

namespace {

// All strictly descending chains of closed sets, largest member first.
std::vector<ClosedChain> all_chains(const ClosureSystem& s) {
  std::vector<SubsetMask> family = closed_family(s);
  std::vector<ClosedChain> out;
  const int f = static_cast<int>(family.size());
  for (std::uint32_t pick = 1; pick < (1u << f); ++pick) {
    std::vector<SubsetMask> sets;
    for (int i = f - 1; i >= 0; --i)
      if ((pick >> i) & 1) sets.push_back(family[static_cast<std::size_t>(i)]);
    bool chain = true;
    for (std::size_t i = 1; i < sets.size() && chain; ++i)
      if (!sets[i].proper_subset_of(sets[i - 1])) chain = false;
    if (chain) out.push_back(ClosedChain{std::move(sets)});
  }
  return out;
}

} // namespace

TEST_CASE("separating verdicts on the fixture chains") {
  ClosureSystem sv3 = v3();
  SeparatingVerdict v = is_separating(sv3, parse_chain(sv3, "a,b,c;a,c;c"), SeparationMode::full);
  CHECK_FALSE(v.separating);
  REQUIRE(v.failure.has_value());
  CHECK(v.failure->first == 2);
  CHECK(v.failure->second.empty()); // the bottom {c} sits inside every member

  ClosureSystem spu2 = pu2();
  SeparatingVerdict w =
      is_separating(spu2, parse_chain(spu2, "p,p0,p1,p01;p,p0"), SeparationMode::full);
  CHECK_FALSE(w.separating);
  REQUIRE(w.failure.has_value());
  CHECK(w.failure->first == 1);

  // Induced on {p0,p1} the chain is separating once the tail is exempt.
  ClosureSystem discrete = induce(spu2, parse_subset(spu2, "p0,p1"));
  ClosedChain chain = parse_chain(discrete, "p0,p1;p1;-");
  CHECK(is_separating(discrete, chain, SeparationMode::to_depth).separating);
  CHECK_FALSE(is_separating(discrete, chain, SeparationMode::full).separating);
}

TEST_CASE("chain construction from an independent set") {
  ClosureSystem spu2 = pu2();
  ChainConstruction cc =
      chain_from_independent(spu2, parse_subset(spu2, "p0,p1"), ChainAmbient::induced_on_x);
  REQUIRE(cc.chain.sets.size() == 3);
  CHECK(cc.chain.sets[0] == SubsetMask(3, 2)); // {p0,p1}
  CHECK(cc.chain.sets[1] == SubsetMask(2, 2)); // {p1}
  CHECK(cc.chain.sets[2] == SubsetMask(0, 2));
  CHECK(cc.system.labels() == std::vector<std::string>{"p0", "p1"});

  ClosureSystem sv3 = v3();
  ChainConstruction whole =
      chain_from_independent(sv3, parse_subset(sv3, "a,b"), ChainAmbient::whole);
  CHECK(whole.chain.sets ==
        std::vector<SubsetMask>{SubsetMask(7, 3), parse_subset(sv3, "b,c"), SubsetMask(0, 3)});

  ClosureSystem sch3 = ch3();
  ChainConstruction single =
      chain_from_independent(sch3, parse_subset(sch3, "c"), ChainAmbient::whole);
  CHECK(single.chain.sets == std::vector<SubsetMask>{sch3.full(), SubsetMask(0, 3)});

  CHECK_THROWS_AS(chain_from_independent(sv3, parse_subset(sv3, "a,c"),
                                         ChainAmbient::induced_on_x),
                  InputError); // not independent
  ClosureSystem sm3 = m3();
  CHECK_THROWS_AS(chain_from_independent(sm3, parse_subset(sm3, "y,z"), ChainAmbient::whole),
                  InputError); // whole-space needs a topology
}

TEST_CASE("independent sets are recovered from separating chains by replay") {
  ClosureSystem spu2 = pu2();
  ChainConstruction cc =
      chain_from_independent(spu2, parse_subset(spu2, "p0,p1"), ChainAmbient::induced_on_x);
  SubsetMask back = independent_from_separating(cc.system, cc.chain);
  CHECK(back == SubsetMask(3, 2)); // both points, in induced coordinates

  ClosureSystem sv3 = v3();
  ChainConstruction whole =
      chain_from_independent(sv3, parse_subset(sv3, "a,b"), ChainAmbient::whole);
  CHECK(independent_from_separating(sv3, whole.chain) == parse_subset(sv3, "a,b"));

  CHECK_THROWS_AS(independent_from_separating(sv3, ClosedChain{{sv3.full()}}), InputError);
}

TEST_CASE("forward lemma and roundtrip across the suite") {
  for (const ClosureSystem& s : small_suite()) {
    if (s.size() > 6) continue;
    std::vector<SubsetMask> independents;
    for_each_mask(s.size(), [&](SubsetMask x) {
      if (is_independent(s, x)) independents.push_back(x);
    });
    bool topological = s.is_topological();
    for (SubsetMask x : independents) {
      if (x.count() < 2) continue;
      bool maximal = true;
      for (SubsetMask y : independents)
        if (x.proper_subset_of(y)) maximal = false;
      if (!maximal) continue;

      ChainConstruction cc = chain_from_independent(s, x, ChainAmbient::induced_on_x);
      CHECK(is_separating(cc.system, cc.chain, SeparationMode::to_depth).separating);
      CHECK(independent_from_separating(cc.system, cc.chain).count() == x.count());

      if (topological) {
        ChainConstruction we = chain_from_independent(s, x, ChainAmbient::whole);
        CHECK(is_separating(we.system, we.chain, SeparationMode::to_depth).separating);
        CHECK(independent_from_separating(we.system, we.chain).count() == x.count());
      }
    }
  }
}

TEST_CASE("no chain of powerset-union closed sets separates") {
  ClosureSystem spu2 = pu2();
  for (const ClosedChain& chain : all_chains(spu2)) {
    if (chain.sets.size() >= 2)
      CHECK_FALSE(is_separating(spu2, chain, SeparationMode::full).separating);
    if (chain.sets.size() >= 3)
      CHECK_FALSE(is_separating(spu2, chain, SeparationMode::to_depth).separating);
  }
}

TEST_CASE("nonseparating witnesses") {
  ClosureSystem sch3 = ch3();
  auto w = nonseparating_witness(sch3, parse_chain(sch3, "a,b,c;a,b;a"));
  REQUIRE(w.has_value());
  CHECK(w->first == 1);
  CHECK(w->second == parse_subset(sch3, "c")); // φ({c}) = E swallows every member

  ClosureSystem sv3 = v3();
  auto w2 = nonseparating_witness(sv3, parse_chain(sv3, "a,b,c;a,c;c"));
  REQUIRE(w2.has_value());
  CHECK(w2->first == 2);
  CHECK(w2->second.empty());

  CHECK_THROWS_AS(nonseparating_witness(sv3, ClosedChain{{sv3.full()}}), InputError);
  ClosureSystem sm3 = m3();
  CHECK_THROWS_AS(nonseparating_witness(sm3, parse_chain(sm3, "x,y,z;x,y")), InputError);
}

TEST_CASE("witness duality with full separation on topological systems") {
  for (const ClosureSystem& s : small_suite()) {
    if (s.size() > 4 || !s.is_topological()) continue;
    for (const ClosedChain& chain : all_chains(s)) {
      if (chain.sets.size() < 2) continue;
      SeparatingVerdict v = is_separating(s, chain, SeparationMode::full);
      auto w = nonseparating_witness(s, chain);
      CHECK(v.separating == !w.has_value());
      if (w) {
        auto [m, f] = *w;
        CHECK(m >= 1);
        CHECK(f.subset_of(chain.sets[0] - chain.sets[static_cast<std::size_t>(m)]));
        for (SubsetMask j : chain.sets)
          CHECK(chain.sets[static_cast<std::size_t>(m)].subset_of(s.closure(f) | j));
      }
    }
  }
}
