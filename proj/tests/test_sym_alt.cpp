#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ginv/catalog.hpp"
#include "ginv/sym_alt.hpp"

using namespace ginv;

TEST(CycleTypes, Basics) {
  const CycleType t({1, 3, 7});
  EXPECT_EQ(t.parts, (std::vector<int>{7, 3, 1}));
  EXPECT_EQ(t.n(), 11);
  EXPECT_TRUE(t.is_even_permutation());
  EXPECT_EQ(t.to_string(), "(7,3,1)");
  EXPECT_EQ(cycle_type_of(parse_cycles("(1 2 3)(4 5)", 6)).parts, (std::vector<int>{3, 2, 1}));
  EXPECT_THROW(CycleType({0, 2}), std::invalid_argument);
}

TEST(Splitting, Examples) {
  EXPECT_TRUE(splits_in_alternating(CycleType({5})));
  EXPECT_FALSE(splits_in_alternating(CycleType({3, 1, 1})));
  EXPECT_FALSE(splits_in_alternating(CycleType({1, 1, 1, 1})));
  EXPECT_TRUE(splits_in_alternating(CycleType({1})));
  EXPECT_THROW(splits_in_alternating(CycleType({2, 1})), std::invalid_argument);
}

TEST(Splitting, AgreesWithBruteForceClassCounts) {
  GroupOptions roomy;
  roomy.max_order = 25000;  // A8 has order 20160
  for (int n = 2; n <= 8; ++n) {
    const Group a = build(GroupSpec::alternating(n), roomy);
    const ClassData c = conjugacy_classes(a);
    std::map<std::vector<int>, int> classes_per_type;
    for (ElemId r : c.reps) ++classes_per_type[cycle_type_of(a.element(r)).parts];
    for (const auto& [parts, count] : classes_per_type)
      EXPECT_EQ(count == 2, splits_in_alternating(CycleType(parts))) << "n=" << n;
    // Self-inverse split classes per the parity criterion.
    for (std::size_t k = 0; k < c.count(); ++k) {
      const CycleType t = cycle_type_of(a.element(c.reps[k]));
      if (!splits_in_alternating(t)) {
        EXPECT_EQ(c.inverse_class[k], k);
        continue;
      }
      EXPECT_EQ(c.inverse_class[k] == k, an_self_inverse_parity(t)) << "n=" << n << " " << t.to_string();
    }
  }
}

TEST(Parity, Examples) {
  EXPECT_TRUE(an_self_inverse_parity(CycleType({5})));
  EXPECT_FALSE(an_self_inverse_parity(CycleType({3})));
  EXPECT_TRUE(an_self_inverse_parity(CycleType({7, 3, 1})));
  EXPECT_THROW(an_self_inverse_parity(CycleType({3, 1, 1})), std::invalid_argument);
}

TEST(SplittingTypes, Enumeration) {
  EXPECT_TRUE(splitting_types(2).empty());
  EXPECT_EQ(splitting_types(1).size(), 1u);
  std::vector<std::string> t;
  for (const auto& c : splitting_types(9)) t.push_back(c.to_string());
  EXPECT_EQ(t, (std::vector<std::string>{"(9)", "(5,3,1)"}));
  EXPECT_THROW(splitting_types(0), std::invalid_argument);
}

TEST(Classification, ClosedForm) {
  const std::set<int> identity{1, 2, 5, 6, 10, 14};
  const std::set<int> phi{3, 4, 7, 8, 12};
  for (int n = 1; n <= 30; ++n) {
    const AnInverting expected = identity.count(n)  ? AnInverting::identity_inverting
                                 : phi.count(n)     ? AnInverting::phi_inverting
                                                    : AnInverting::no_inverting;
    EXPECT_EQ(an_classification_closed_form(n), expected) << n;
  }
  EXPECT_EQ(an_classification(10), AnInverting::identity_inverting);
  EXPECT_EQ(an_classification(12), AnInverting::phi_inverting);
  EXPECT_EQ(an_classification(9), AnInverting::no_inverting);
  EXPECT_EQ(an_classification(6), AnInverting::identity_inverting);
  EXPECT_EQ(to_string(AnInverting::phi_inverting), "phi");
}

TEST(Classification, SearchAgreesForSmallN) {
  for (int n = 3; n <= 7; ++n) {
    const Group a = build(GroupSpec::alternating(n));
    const ClassData c = conjugacy_classes(a);
    const bool exists = exists_class_inverting(a, c).status == SearchStatus::found;
    const AnInverting k = an_classification(n);
    EXPECT_EQ(exists, k != AnInverting::no_inverting) << n;
    EXPECT_EQ(is_ambivalent(a, c), k == AnInverting::identity_inverting) << n;
  }
}
