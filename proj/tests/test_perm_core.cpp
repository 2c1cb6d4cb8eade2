#include <gtest/gtest.h>

#include <set>

#include "ginv/catalog.hpp"
#include "ginv/group.hpp"
#include "ginv/perm.hpp"
#include "oracles.hpp"

using namespace ginv;

TEST(Perm, ProductActsRightToLeft) {
  const Perm a = Perm::from_cycles(3, {{0, 1}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  const Perm ab = a * b;  // apply b, then a
  EXPECT_EQ(ab[0], 1);
  EXPECT_EQ(ab[1], 2);
  EXPECT_EQ(ab[2], 0);
}

TEST(Perm, InverseOrderParity) {
  const Perm p = Perm::from_cycles(6, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(p * p.inverse(), Perm::identity(6));
  EXPECT_EQ(p.order(), 6u);
  EXPECT_FALSE(p.is_even());
  EXPECT_TRUE((p * p).is_even());
  EXPECT_EQ(p.pow(6), Perm::identity(6));
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{3, 2, 1}));
}

TEST(Perm, CycleStringRoundTrip) {
  const Perm p = parse_cycles("(1 2 3)(4 5)", 5);
  EXPECT_EQ(p.to_cycle_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(parse_cycles(p.to_cycle_string(), 5), p);
  EXPECT_EQ(Perm::identity(4).to_cycle_string(), "()");
  EXPECT_EQ(parse_cycles("(1,3)", 3), Perm::from_cycles(3, {{0, 2}}));
}

TEST(Perm, ParseErrors) {
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("(0 1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 2 1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 x)", 3), ParseError);
}

TEST(Group, GenerateS3FromTranspositionAndThreeCycle) {
  const Group g = generate_group({Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.element(0).is_identity());
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(g.exponent(), 6u);
}

TEST(Group, EmptyGeneratorsGiveTrivialGroup) {
  const Group g = generate_group(std::vector<Perm>{}, 1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(conjugacy_classes(g).count(), 1u);
  EXPECT_EQ(element_order(g, 0), 1u);
}

TEST(Group, MultiplicationAgreesWithPermutations) {
  for (const char* spec : {"S4", "Q8", "F21", "A5"}) {
    const Group g = build(parse_group_spec(spec));
    for (ElemId a = 0; a < g.order(); a += 3)
      for (ElemId b = 0; b < g.order(); b += 5) {
        EXPECT_EQ(g.element(g.mul(a, b)), g.element(a) * g.element(b)) << spec;
        EXPECT_EQ(g.element(g.inv(a)), g.element(a).inverse()) << spec;
      }
  }
}

TEST(Group, LargeGroupWithoutTableStillMultiplies) {
  const Group g = build(GroupSpec::m11());
  EXPECT_EQ(g.order(), 7920u);
  for (ElemId a = 0; a < g.order(); a += 997)
    for (ElemId b = 1; b < g.order(); b += 1231) EXPECT_EQ(g.element(g.mul(a, b)), g.element(a) * g.element(b));
}

TEST(Group, SizeCapIsEnforced) {
  GroupOptions small;
  small.max_order = 100;
  EXPECT_THROW(build(GroupSpec::symmetric(5), small), SizeLimitError);
}

TEST(Group, CanonicalOrderIsDeterministic) {
  const Group a = build(GroupSpec::symmetric(4));
  const Group b = build(GroupSpec::symmetric(4));
  for (ElemId i = 0; i < a.order(); ++i) EXPECT_EQ(a.element(i), b.element(i));
}

TEST(Group, WordsEvaluate) {
  const Group g = build(GroupSpec::dihedral(4));
  std::vector<ElemId> gens;
  for (std::size_t i = 0; i < g.num_generators(); ++i) gens.push_back(g.generator_id(i));
  for (const Word& w : g.relators()) EXPECT_EQ(g.evaluate(w, gens), g.identity());
  EXPECT_EQ(g.evaluate(parse_word("aA"), gens), g.identity());
  EXPECT_EQ(g.evaluate(parse_word("a^4"), gens), g.identity());
  EXPECT_NE(g.evaluate(parse_word("a^2"), gens), g.identity());
  EXPECT_THROW(parse_word("a^"), ParseError);
}

TEST(ConjugacyClasses, S3) {
  const Group g = build(GroupSpec::symmetric(3));
  const ClassData c = conjugacy_classes(g);
  std::multiset<std::size_t> sizes(c.sizes.begin(), c.sizes.end());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2, 3}));
  EXPECT_EQ(c.reps[0], g.identity());
}

TEST(ConjugacyClasses, S5HasOneClassPerPartition) {
  const Group g = build(GroupSpec::symmetric(5));
  const ClassData c = conjugacy_classes(g);
  EXPECT_EQ(c.count(), 7u);
  std::set<std::vector<std::size_t>> types;
  for (ElemId r : c.reps) types.insert(g.element(r).cycle_type());
  EXPECT_EQ(types.size(), 7u);
}

TEST(ConjugacyClasses, MatchBruteForceOrbits) {
  for (const char* spec : {"S4", "D5", "Q8", "A4", "F21", "H27", "Ab[2,3]"}) {
    const Group g = build(parse_group_spec(spec));
    const ClassData c = conjugacy_classes(g);
    const oracle::Brute b(g);
    const auto labels = oracle::class_labels(b);
    EXPECT_EQ(c.count(), oracle::class_count(b)) << spec;
    for (ElemId x = 0; x < g.order(); ++x) {
      EXPECT_EQ(c.reps[c.class_of[x]], labels[x]) << spec;
      EXPECT_EQ(g.conj(c.transversal[x], c.reps[c.class_of[x]]), x) << spec;
      EXPECT_EQ(c.class_of[g.inv(x)], c.inverse_class[c.class_of[x]]) << spec;
    }
    std::size_t total = 0;
    for (auto s : c.sizes) total += s;
    EXPECT_EQ(total, g.order());
  }
}

TEST(Centralizer, OrdersMatchClassSizes) {
  const Group g = build(GroupSpec::symmetric(4));
  const ClassData c = conjugacy_classes(g);
  for (std::size_t k = 0; k < c.count(); ++k) {
    const Group h = centralizer(g, c.reps[k]);
    EXPECT_EQ(h.order() * c.sizes[k], g.order());
    for (ElemId y = 0; y < h.order(); ++y) EXPECT_TRUE(g.commute(h.parent_ids()[y], c.reps[k]));
  }
}

TEST(ElementOrder, Examples) {
  const Group s3 = build(GroupSpec::symmetric(3));
  EXPECT_EQ(element_order(s3, s3.identity()), 1u);
  EXPECT_EQ(element_order(s3, s3.index_of(parse_cycles("(1 2 3)", 3))), 3u);
  const Group m11 = build(GroupSpec::m11());
  std::size_t order11 = 0;
  for (ElemId x = 0; x < m11.order(); ++x)
    if (m11.element(x).order() == 11) {
      EXPECT_EQ(element_order(m11, x), 11u);
      ++order11;
    }
  EXPECT_EQ(order11, 1440u);
}
