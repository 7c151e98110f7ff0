#include <doctest.h>

#include "noecover/errors.hpp"
#include "noecover/parse.hpp"
#include "support/fixtures.hpp"

using namespace noecover;
using testsupport::make_system;

TEST_CASE("system files parse into the right representations") {
  CHECK(std::string(testsupport::v3().repr_name()) == "preorder");
  CHECK(std::string(testsupport::m3().repr_name()) == "moore");
  CHECK(std::string(testsupport::pu2().repr_name()) == "powerset-union");
  ClosureSystem imp = make_system("system implications\nelements a b c\nrule a b -> c\n");
  CHECK(std::string(imp.repr_name()) == "implications");
  CHECK(imp.closure(parse_subset(imp, "a,b")) == parse_subset(imp, "a,b,c"));
  CHECK(imp.closure(parse_subset(imp, "a")) == parse_subset(imp, "a"));
}

TEST_CASE("comments, blank lines and the powerset-union labels") {
  ClosureSystem pu =
      make_system("# leading comment\n\nsystem powerset-union\npowerset-union 2 # trailing\n");
  CHECK(pu.labels() == std::vector<std::string>{"p", "p0", "p1", "p01"});
  CHECK(testsupport::pu3().labels()[7] == "p012");
}

TEST_CASE("parse errors carry the file name and line number") {
  CHECK_THROWS_WITH_AS(make_system("system moore\nelements a\nbogus a\n", "f.sys"),
                       doctest::Contains("f.sys:3"), InputError);
  CHECK_THROWS_WITH_AS(make_system("elements a\n", "f.sys"), doctest::Contains("f.sys:1"),
                       InputError);
  CHECK_THROWS_AS(make_system("system moore\nelements a b!\n"), InputError);
  CHECK_THROWS_AS(make_system("system preorder\nelements a\nle a missing\n"), InputError);
}

TEST_CASE("duplicate labels and missing pieces are rejected") {
  CHECK_THROWS_AS(make_system("system moore\nelements a b a\nclosed a b a\n"), InputError);
  CHECK_THROWS_AS(make_system("system moore\nelements a b\nclosed a\n"), InputError); // no full set
  CHECK_THROWS_AS(make_system("system powerset-union\n"), InputError);
  CHECK_THROWS_AS(make_system("system moore\nclosed a\n"), InputError);
}

TEST_CASE("Moore input must be intersection-closed unless completed") {
  const std::string text = "system moore\nelements x y z\nclosed x y\nclosed y z\nclosed x y z\n";
  CHECK_THROWS_WITH_AS(make_system(text), doctest::Contains("intersection-closed"), InputError);
  ClosureSystem completed = make_system(text, "test", BuildOptions{true, false});
  CHECK(completed.is_closed(parse_subset(completed, "y")));
  ClosureSystem lax = make_system(text, "test", BuildOptions{false, true});
  CHECK_FALSE(axiom_report(lax).intersection_closed);
}

TEST_CASE("size guards reject oversized systems") {
  std::string labels;
  for (int i = 0; i < 21; ++i) labels += " l" + std::to_string(i);
  CHECK_THROWS_AS(make_system("system moore\nelements" + labels + "\nclosed" + labels + "\n"),
                  InputError);
  CHECK_THROWS_AS(make_system("system powerset-union\npowerset-union 5\n"), InputError);
  CHECK(make_system("system powerset-union\npowerset-union 4\n").size() == 16);
}

TEST_CASE("subset literals") {
  ClosureSystem s = testsupport::v3();
  CHECK(parse_subset(s, "-").empty());
  CHECK(parse_subset(s, "a,c") == SubsetMask::of({0, 2}, 3));
  CHECK_THROWS_AS(parse_subset(s, "a,a"), InputError);
  CHECK_THROWS_AS(parse_subset(s, "d"), InputError);
  CHECK_THROWS_AS(parse_subset(s, ""), InputError);
}

TEST_CASE("chain literals validate closedness and strict descent") {
  ClosureSystem s = testsupport::v3();
  ClosedChain chain = parse_chain(s, "a,b,c;a,c;c");
  CHECK(chain.sets.size() == 3);
  CHECK_THROWS_WITH_AS(parse_chain(s, "a,b,c;a"), doctest::Contains("not closed"), InputError);
  CHECK_THROWS_WITH_AS(parse_chain(s, "a,c;a,c"), doctest::Contains("strictly descending"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_chain(s, "c;a,c"), doctest::Contains("strictly descending"),
                       InputError);
  // the empty set is a legal member when closed
  CHECK(parse_chain(s, "a,c;c;-").sets.back().empty());
}

TEST_CASE("decomposition literals") {
  ClosureSystem s = testsupport::v3();
  GMPDecomposition d = parse_decomposition(s, "A=a N=- | A=b N=-");
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].elements == parse_subset(s, "a"));
  CHECK(d.blocks[0].ideal.kind == IdealDescriptor::Kind::explicit_sets);
  CHECK(d.blocks[0].ideal.sets == std::vector<SubsetMask>{SubsetMask::empty_set(3)});
  GMPDecomposition imp = parse_decomposition(s, "A=a,c N=implicit");
  CHECK(imp.blocks[0].ideal.kind == IdealDescriptor::Kind::implicit);
  CHECK_THROWS_AS(parse_decomposition(s, "A=a"), InputError);
  CHECK_THROWS_AS(parse_decomposition(s, "N=- A=a"), InputError);
}
