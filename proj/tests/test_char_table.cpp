#include <gtest/gtest.h>

#include "ginv/automorphisms.hpp"
#include "ginv/catalog.hpp"
#include "ginv/char_table.hpp"
#include "oracles.hpp"

using namespace ginv;

namespace {

struct Built {
  Group g;
  ClassData classes;
  CharacterTable table;
};

Built make(const char* spec) {
  Group g = build(parse_group_spec(spec));
  ClassData c = conjugacy_classes(g);
  CharacterTable t = character_table(g, c);
  return {std::move(g), std::move(c), std::move(t)};
}

// Sum over classes of |C_k| chi_i(k) conj(chi_j(k)) == |G| delta_ij.
void expect_row_orthogonality(const Built& b, const char* spec) {
  const std::size_t r = b.classes.count();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Cyclo s(b.table.exponent);
      for (std::size_t k = 0; k < r; ++k)
        s += b.table.value(i, k) * b.table.value(j, k).conj() * static_cast<std::int64_t>(b.classes.sizes[k]);
      EXPECT_EQ(s, Cyclo::integer(1, i == j ? static_cast<std::int64_t>(b.g.order()) : 0))
          << spec << " rows " << i << "," << j;
    }
}

// Sum over irreducibles of chi(k) conj(chi(l)) == |C_G(x_k)| delta_kl.
void expect_column_orthogonality(const Built& b, const char* spec) {
  const std::size_t r = b.classes.count();
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      Cyclo s(b.table.exponent);
      for (std::size_t i = 0; i < r; ++i) s += b.table.value(i, k) * b.table.value(i, l).conj();
      const auto cent = static_cast<std::int64_t>(b.g.order() / b.classes.sizes[k]);
      EXPECT_EQ(s, Cyclo::integer(1, k == l ? cent : 0)) << spec << " cols " << k << "," << l;
    }
}

}  // namespace

TEST(ClassMult, TrivialGroup) {
  const Group g = build(GroupSpec::cyclic(1));
  const auto a = class_mult_coefficients(g, conjugacy_classes(g));
  EXPECT_EQ(a.at(0, 0, 0), 1u);
}

TEST(ClassMult, TranspositionsInS3) {
  const Group g = build(GroupSpec::symmetric(3));
  const ClassData c = conjugacy_classes(g);
  const auto t = c.class_of[g.index_of(parse_cycles("(1 2)", 3))];
  EXPECT_EQ(class_mult_coefficients(g, c).at(t, t, 0), 3u);
}

TEST(ClassMult, MatchesBruteForceCount) {
  const Group g = build(GroupSpec::symmetric(4));
  const ClassData c = conjugacy_classes(g);
  const auto a = class_mult_coefficients(g, c);
  for (std::size_t i = 0; i < c.count(); ++i)
    for (std::size_t j = 0; j < c.count(); ++j)
      for (std::size_t k = 0; k < c.count(); ++k) {
        std::uint64_t count = 0;
        for (ElemId x = 0; x < g.order(); ++x)
          for (ElemId y = 0; y < g.order(); ++y)
            if (c.class_of[x] == i && c.class_of[y] == j && g.mul(x, y) == c.reps[k]) ++count;
        EXPECT_EQ(a.at(i, j, k), count);
      }
}

TEST(CharacterTable, C2) {
  const Built b = make("C2");
  ASSERT_EQ(b.table.size(), 2u);
  EXPECT_EQ(b.table.value(0, 0), Cyclo::integer(1, 1));
  EXPECT_EQ(b.table.value(0, 1), Cyclo::integer(1, 1));
  EXPECT_EQ(b.table.value(1, 0), Cyclo::integer(1, 1));
  EXPECT_EQ(b.table.value(1, 1), Cyclo::integer(1, -1));
}

TEST(CharacterTable, S3Rows) {
  const Built b = make("S3");
  EXPECT_EQ(b.table.degrees, (std::vector<std::size_t>{1, 1, 2}));
  const auto trans = b.classes.class_of[b.g.index_of(parse_cycles("(1 2)", 3))];
  const auto three = b.classes.class_of[b.g.index_of(parse_cycles("(1 2 3)", 3))];
  EXPECT_EQ(b.table.value(1, trans), Cyclo::integer(1, -1));  // sign
  EXPECT_EQ(b.table.value(2, trans), Cyclo::integer(1, 0));
  EXPECT_EQ(b.table.value(2, three), Cyclo::integer(1, -1));
  expect_row_orthogonality(b, "S3");
}

TEST(CharacterTable, Q8) {
  const Built b = make("Q8");
  EXPECT_EQ(b.table.degrees, (std::vector<std::size_t>{1, 1, 1, 1, 2}));
  EXPECT_TRUE(all_characters_real(b.table));
}

TEST(CharacterTable, Reality) {
  EXPECT_TRUE(all_characters_real(make("S4").table));
  EXPECT_FALSE(all_characters_real(make("C3").table));
  EXPECT_FALSE(all_characters_real(make("M11").table));
}

TEST(CharacterTable, M11Degrees) {
  const Built b = make("M11");
  EXPECT_EQ(b.table.degrees, (std::vector<std::size_t>{1, 10, 10, 10, 11, 16, 16, 44, 45, 55}));
}

TEST(CharacterTable, OrthogonalityAcrossCatalog) {
  for (const char* spec : {"C1", "C7", "Ab[2,2,2]", "Ab[3,3]", "D4", "D5", "A4", "A5", "S4", "F21", "H27", "Q8"}) {
    const Built b = make(spec);
    EXPECT_EQ(b.table.size(), b.classes.count()) << spec;
    expect_row_orthogonality(b, spec);
    expect_column_orthogonality(b, spec);
    EXPECT_EQ(all_characters_real(b.table), is_ambivalent(b.g, b.classes)) << spec;
  }
}

TEST(CharacterTable, TrivialCharacterFirstAndDegreesDivideOrder) {
  for (const char* spec : {"S5", "A6", "H27"}) {
    const Built b = make(spec);
    for (std::size_t k = 0; k < b.classes.count(); ++k) EXPECT_EQ(b.table.value(0, k), Cyclo::integer(1, 1));
    std::size_t sum = 0;
    for (std::size_t d : b.table.degrees) {
      EXPECT_EQ(b.g.order() % d, 0u);
      sum += d * d;
    }
    EXPECT_EQ(sum, b.g.order());
  }
}

TEST(DixonPrime, Conditions) {
  EXPECT_EQ(dixon_prime(9, 3, 1u << 20), 7u);
  EXPECT_EQ(dixon_prime(6, 6, 1u << 20), 7u);
  const auto p = dixon_prime(7920, 1320, 1u << 31);
  EXPECT_EQ(p % 1320, 1u);
  EXPECT_GT(p, 1320u);
  EXPECT_TRUE(is_prime(p));
  EXPECT_THROW(dixon_prime(7920, 1320, 100), std::runtime_error);
}

TEST(CharacterTable, OrderCap) {
  const Group g = build(GroupSpec::symmetric(5));
  CharTableOptions opts;
  opts.max_order = 60;
  EXPECT_THROW(character_table(g, conjugacy_classes(g), opts), SizeLimitError);
}
