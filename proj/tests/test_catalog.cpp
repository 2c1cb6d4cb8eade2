#include <gtest/gtest.h>

#include "ginv/catalog.hpp"

using namespace ginv;

TEST(Catalog, Orders) {
  EXPECT_EQ(build(GroupSpec::symmetric(4)).order(), 24u);
  EXPECT_EQ(build(GroupSpec::alternating(5)).order(), 60u);
  EXPECT_EQ(build(GroupSpec::cyclic(12)).order(), 12u);
  EXPECT_EQ(build(GroupSpec::abelian({2, 4, 3})).order(), 24u);
  EXPECT_EQ(build(GroupSpec::dihedral(5)).order(), 10u);
  EXPECT_EQ(build(GroupSpec::q8()).order(), 8u);
  EXPECT_EQ(build(GroupSpec::f21()).order(), 21u);
  EXPECT_EQ(build(GroupSpec::symmetric(1)).order(), 1u);
  EXPECT_EQ(build(GroupSpec::alternating(2)).order(), 1u);
  EXPECT_EQ(build(GroupSpec::dihedral(1)).order(), 2u);
  EXPECT_EQ(build(GroupSpec::dihedral(2)).order(), 4u);
}

TEST(Catalog, Mathieu11) {
  const Group g = build(GroupSpec::m11());
  EXPECT_EQ(g.order(), 7920u);  // 2^4 * 3^2 * 5 * 11
  EXPECT_EQ(g.degree(), 11u);
  EXPECT_EQ(sylow_count(g, 11), 144u);
  ElemId x = 0;
  while (g.element(x).order() != 11) ++x;
  EXPECT_EQ(cyclic_normalizer_order(g, x), 55u);
  EXPECT_TRUE(g.has_presentation());
}

TEST(Catalog, HeisenbergIsNonabelianOfOddOrder) {
  const Group g = build(GroupSpec::heisenberg(3));
  EXPECT_EQ(g.order(), 27u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(g.exponent(), 3u);
  EXPECT_EQ(build(GroupSpec::heisenberg(5)).order(), 125u);
  EXPECT_THROW(build(GroupSpec::heisenberg(4)), std::invalid_argument);
}

TEST(Catalog, RelatorsHoldOnGenerators) {
  for (const char* spec : {"S5", "A6", "A7", "C6", "Ab[2,3]", "D6", "Q8", "M11", "H27", "F21"}) {
    const Group g = build(parse_group_spec(spec));
    ASSERT_TRUE(g.has_presentation()) << spec;
    std::vector<ElemId> gens;
    for (std::size_t i = 0; i < g.num_generators(); ++i) gens.push_back(g.generator_id(i));
    for (const Word& w : g.relators()) EXPECT_EQ(g.evaluate(w, gens), g.identity()) << spec;
  }
}

TEST(Catalog, SylowCounts) {
  EXPECT_EQ(sylow_count(build(GroupSpec::symmetric(3)), 3), 1u);
  EXPECT_EQ(sylow_count(build(GroupSpec::alternating(5)), 5), 6u);
  EXPECT_EQ(sylow_count(build(GroupSpec::f21()), 7), 1u);
}

TEST(Catalog, ParseAndPrintRoundTrip) {
  for (const char* spec : {"S5", "A6", "C12", "Ab[2,4,3]", "D4", "Q8", "M11", "H27", "F21"})
    EXPECT_EQ(to_string(parse_group_spec(spec)), spec);
  EXPECT_EQ(to_string(parse_group_spec(" S4 ")), "S4");
  const GroupSpec p = parse_group_spec("perm: (1 2 3), (1 2)");
  EXPECT_EQ(p.kind, GroupKind::explicit_generators);
  EXPECT_EQ(build(p).order(), 6u);
  EXPECT_EQ(build(parse_group_spec(to_string(p))).order(), 6u);
  EXPECT_FALSE(build(p).has_presentation());
}

TEST(Catalog, ParseErrors) {
  for (const char* bad : {"", "X5", "S", "S-1", "Ab[]", "Ab[2,", "H4", "perm: (1 2", "C0", "s4"})
    EXPECT_THROW(parse_group_spec(bad), ParseError) << bad;
}
