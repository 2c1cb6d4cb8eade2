#include <gtest/gtest.h>

#include "ginv/cyclo.hpp"

using namespace ginv;

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p = cyclotomic_polynomial(105);
  EXPECT_EQ(p.size(), 49u);
  EXPECT_EQ(p[7], -2);
}

TEST(Cyclo, RootsOfUnitySumToZero) {
  for (std::uint32_t m : {2u, 3u, 5u, 6u, 12u}) {
    Cyclo s(m);
    for (std::uint32_t k = 0; k < m; ++k) s += Cyclo::root(m, k);
    EXPECT_TRUE(s.is_zero()) << m;
  }
}

TEST(Cyclo, EqualityAcrossOrders) {
  EXPECT_EQ(Cyclo::root(6, 2), Cyclo::root(3, 1));
  EXPECT_EQ(Cyclo::root(4, 2), Cyclo::integer(1, -1));
  EXPECT_EQ(Cyclo::root(3, 1) + Cyclo::root(3, 2), Cyclo::integer(3, -1));
  EXPECT_EQ(Cyclo::root(5, 7), Cyclo::root(5, 2));
}

TEST(Cyclo, ConjugationMapsToNegativePowers) {
  const Cyclo z = Cyclo::root(12, 5) * 3 + Cyclo::integer(12, 2);
  const Cyclo c = z.conj();
  EXPECT_EQ(c.coeffs()[7], 3);
  EXPECT_EQ((z * c).conj(), z * c);  // |z|^2 is real
  EXPECT_EQ(c.conj(), z);
}

TEST(Cyclo, Arithmetic) {
  const Cyclo w = Cyclo::root(3, 1);
  EXPECT_EQ(w * w * w, Cyclo::integer(3, 1));
  const Cyclo i = Cyclo::root(4, 1);
  EXPECT_EQ(i * i, Cyclo::integer(4, -1));
  const Cyclo mixed = w * i;  // order 12
  EXPECT_EQ(mixed.order(), 12u);
  EXPECT_EQ(mixed, Cyclo::root(12, 7));
  EXPECT_EQ((w - w).as_integer(), std::optional<std::int64_t>(0));
  EXPECT_EQ((w + w.conj()).as_integer(), std::optional<std::int64_t>(-1));
  EXPECT_FALSE(w.as_integer().has_value());
  EXPECT_EQ(lcm_order(4, 6), 12u);
}

TEST(Cyclo, ReduceMod) {
  // zeta_4 -> 2 in F_5 (2 has order 4): 1 + zeta_4 -> 3.
  const Cyclo v = Cyclo::integer(4, 1) + Cyclo::root(4, 1);
  EXPECT_EQ(v.reduce_mod(5, 2), 3u);
  EXPECT_EQ((Cyclo::root(4, 1) * Cyclo::root(4, 1)).reduce_mod(5, 2), 4u);
}

TEST(Cyclo, ToString) {
  EXPECT_EQ(Cyclo::integer(1, 3).to_string(), "3");
  EXPECT_EQ(Cyclo(5).to_string(), "0");
  EXPECT_NE(Cyclo::root(3, 1).to_string().find("z3"), std::string::npos);
}
