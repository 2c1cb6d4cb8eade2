#include <gtest/gtest.h>

#include <set>

#include "ginv/automorphisms.hpp"
#include "ginv/catalog.hpp"
#include "oracles.hpp"

using namespace ginv;

namespace {

struct Ctx {
  Group g;
  ClassData classes;
  DoubleClassData dclasses;
};

Ctx make(const char* spec) {
  Group g = build(parse_group_spec(spec));
  ClassData c = conjugacy_classes(g);
  DoubleClassData d = double_classes(g, c);
  return {std::move(g), std::move(c), std::move(d)};
}

}  // namespace

TEST(Automorphisms, GroupSizes) {
  for (auto [spec, size] : std::vector<std::pair<const char*, std::size_t>>{
           {"C1", 1}, {"C2", 1}, {"C4", 2}, {"C5", 4}, {"C12", 4}, {"Ab[2,2]", 6}, {"S3", 6},
           {"D4", 8}, {"Q8", 24}, {"A4", 24}, {"S4", 24}, {"F21", 42}, {"H27", 432}, {"A5", 120}}) {
    const Ctx c = make(spec);
    EXPECT_EQ(automorphism_group(c.g, c.classes).size(), size) << spec;
  }
}

TEST(Automorphisms, ResultsAreDistinctAutomorphisms) {
  for (const char* spec : {"S3", "D4", "Q8", "A4", "F21"}) {
    const Ctx c = make(spec);
    const oracle::Brute b(c.g);
    const auto all = automorphism_group(c.g, c.classes);
    std::set<std::vector<ElemId>> seen;
    for (const auto& a : all) {
      EXPECT_TRUE(oracle::is_automorphism(b, a.full_map)) << spec;
      EXPECT_TRUE(seen.insert(a.full_map).second) << spec;
    }
  }
}

TEST(Automorphisms, PresentationFreeSearchAgrees) {
  // The same group given by bare generators must yield the same count.
  const Group g = build(parse_group_spec("perm: (1 2 3 4), (1 2)"));
  EXPECT_FALSE(g.has_presentation());
  EXPECT_EQ(automorphism_group(g, conjugacy_classes(g)).size(), 24u);
}

TEST(Automorphisms, M11HasOnlyInnerAutomorphisms) {
  const Group g = build(GroupSpec::m11());
  const ClassData c = conjugacy_classes(g);
  std::size_t count = 0;
  for_each_automorphism(g, c, {}, [&](const Automorphism&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 7920u);
}

TEST(Automorphisms, InnerAutomorphismCounts) {
  EXPECT_EQ(inner_automorphisms(build(GroupSpec::cyclic(5))).size(), 1u);
  EXPECT_EQ(inner_automorphisms(build(GroupSpec::symmetric(3))).size(), 6u);
  EXPECT_EQ(inner_automorphisms(build(GroupSpec::q8())).size(), 4u);
  const Group g = build(GroupSpec::dihedral(4));
  const ClassData c = conjugacy_classes(g);
  for (const auto& a : inner_automorphisms(g)) EXPECT_TRUE(is_class_preserving(g, c, a));
}

TEST(Automorphisms, FromGeneratorImages) {
  const Group g = build(GroupSpec::symmetric(3));
  std::vector<ElemId> gens;
  for (std::size_t i = 0; i < g.num_generators(); ++i) gens.push_back(g.generator_id(i));
  EXPECT_TRUE(Automorphism::from_generator_images(g, gens)->is_identity());
  // Both generators to the identity: not bijective.
  EXPECT_FALSE(Automorphism::from_generator_images(g, std::vector<ElemId>(gens.size(), 0)).has_value());
  EXPECT_THROW(Automorphism::inversion(g), std::invalid_argument);
}

TEST(Predicates, ClassInvertingExamples) {
  for (int n = 2; n <= 5; ++n) {
    const Group g = build(GroupSpec::symmetric(n));
    EXPECT_TRUE(is_class_inverting(g, conjugacy_classes(g), Automorphism::identity(g)));
  }
  const Ctx c3 = make("C3");
  const Automorphism inv = Automorphism::inversion(c3.g);
  EXPECT_FALSE(is_class_inverting(c3.g, c3.classes, Automorphism::identity(c3.g)));
  EXPECT_TRUE(is_class_inverting(c3.g, c3.classes, inv));
  EXPECT_FALSE(is_class_preserving(c3.g, c3.classes, inv));
  EXPECT_FALSE(is_double_class_preserving(c3.g, c3.dclasses, inv));
  EXPECT_FALSE(is_double_class_inverting(c3.g, c3.dclasses, Automorphism::identity(c3.g)));
  const Ctx s3 = make("S3");
  EXPECT_TRUE(is_double_class_inverting(s3.g, s3.dclasses, Automorphism::identity(s3.g)));
  for (const char* spec : {"C2", "C6", "Ab[2,4]", "Ab[3,3]"}) {
    const Ctx c = make(spec);
    EXPECT_TRUE(is_double_class_inverting(c.g, c.dclasses, Automorphism::inversion(c.g))) << spec;
  }
}

TEST(Predicates, ClassLevelAgreesWithElementLevel) {
  for (const char* spec : {"S3", "D4", "Q8", "A4", "F21", "C5", "Ab[2,2]"}) {
    const Ctx c = make(spec);
    const oracle::Brute b(c.g);
    for (const auto& a : automorphism_group(c.g, c.classes)) {
      EXPECT_EQ(is_class_inverting(c.g, c.classes, a), oracle::class_inverting(b, a.full_map)) << spec;
      EXPECT_EQ(is_double_class_inverting(c.g, c.dclasses, a), oracle::double_class_inverting(b, a.full_map))
          << spec;
    }
  }
}

TEST(Predicates, Ambivalence) {
  const Ctx s6 = make("S6");
  EXPECT_TRUE(is_ambivalent(s6.g, s6.classes));
  EXPECT_TRUE(is_doubly_ambivalent(s6.g, s6.dclasses));
  const Ctx c2 = make("C2");
  EXPECT_TRUE(is_ambivalent(c2.g, c2.classes));
  EXPECT_TRUE(is_doubly_ambivalent(c2.g, c2.dclasses));
  const Group m11 = build(GroupSpec::m11());
  EXPECT_FALSE(is_ambivalent(m11, conjugacy_classes(m11)));
}

TEST(Search, ClassInverting) {
  const Ctx a5 = make("A5");
  const SearchResult r = exists_class_inverting(a5.g, a5.classes);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(is_class_inverting(a5.g, a5.classes, *r.witness));

  const Group m11 = build(GroupSpec::m11());
  const SearchResult none = exists_class_inverting(m11, conjugacy_classes(m11));
  EXPECT_EQ(none.status, SearchStatus::none);
  EXPECT_GT(none.nodes, 0u);

  const Ctx h = make("H27");
  EXPECT_EQ(exists_class_inverting(h.g, h.classes).status, SearchStatus::none);
}

TEST(Search, DoubleClassInverting) {
  const Ctx s4 = make("S4");
  const SearchResult r = exists_double_class_inverting(s4.g, s4.classes, s4.dclasses);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(is_double_class_inverting(s4.g, s4.dclasses, *r.witness));
  const Ctx c5 = make("C5");
  const SearchResult c = exists_double_class_inverting(c5.g, c5.classes, c5.dclasses);
  ASSERT_EQ(c.status, SearchStatus::found);
  EXPECT_EQ(*c.witness, Automorphism::inversion(c5.g));
  const Ctx f = make("F21");
  EXPECT_EQ(exists_double_class_inverting(f.g, f.classes, f.dclasses).status, SearchStatus::none);
}

TEST(Search, SearchAgreesWithEnumeration) {
  for (const char* spec : {"S3", "D4", "Q8", "A4", "F21", "H27", "C7", "D5"}) {
    const Ctx c = make(spec);
    bool any_single = false;
    bool any_double = false;
    for (const auto& a : automorphism_group(c.g, c.classes)) {
      any_single = any_single || is_class_inverting(c.g, c.classes, a);
      any_double = any_double || is_double_class_inverting(c.g, c.dclasses, a);
    }
    EXPECT_EQ(exists_class_inverting(c.g, c.classes).status == SearchStatus::found, any_single) << spec;
    EXPECT_EQ(exists_double_class_inverting(c.g, c.classes, c.dclasses).status == SearchStatus::found,
              any_double)
        << spec;
  }
}

TEST(Search, BudgetExhaustion) {
  const Group m11 = build(GroupSpec::m11());
  SearchOptions tiny;
  tiny.node_budget = 5;
  const SearchResult r = exists_class_inverting(m11, conjugacy_classes(m11), tiny);
  EXPECT_EQ(r.status, SearchStatus::budget_exceeded);
  EXPECT_THROW(automorphism_group(m11, conjugacy_classes(m11), tiny), SearchBudgetExceeded);
}

TEST(Search, PresentationFreeCap) {
  const Group g = build(parse_group_spec("perm: (1 2 3 4 5 6 7), (1 2)"));
  EXPECT_FALSE(g.has_presentation());
  EXPECT_THROW(exists_class_inverting(g, conjugacy_classes(g)), SizeLimitError);
}

TEST(CompositionLaws, InvertingTimesInvertingPreserves) {
  for (const char* spec : {"S3", "D4", "Q8", "A4", "C6", "Ab[2,2]"}) {
    const Ctx c = make(spec);
    const auto all = automorphism_group(c.g, c.classes);
    for (const auto& a : all)
      for (const auto& b : all) {
        const Automorphism ab = a.after(c.g, b);
        if (is_class_inverting(c.g, c.classes, a) && is_class_inverting(c.g, c.classes, b)) {
          EXPECT_TRUE(is_class_preserving(c.g, c.classes, ab)) << spec;
        }
        if (is_double_class_inverting(c.g, c.dclasses, a) && is_double_class_inverting(c.g, c.dclasses, b)) {
          EXPECT_TRUE(is_double_class_preserving(c.g, c.dclasses, ab)) << spec;
        }
      }
  }
}
