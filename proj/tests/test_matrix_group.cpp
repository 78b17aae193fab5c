#include <gtest/gtest.h>

#include <algorithm>

#include "progmix/matrix_group.hpp"

using namespace progmix;

TEST(GroupElement, Validation) {
  EXPECT_NO_THROW(GroupElement(2, 5, {1, 1, 0, 1}));
  EXPECT_THROW(GroupElement(2, 5, {1, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(GroupElement(2, 5, {1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(GroupElement(4, 5, {1}), std::invalid_argument);
  EXPECT_THROW(GroupElement(2, 9, {1, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(mul(GroupElement::identity(2, 5), GroupElement::identity(2, 7)),
               std::invalid_argument);
  EXPECT_THROW(mul(GroupElement::identity(2, 5), GroupElement::identity(3, 5)),
               std::invalid_argument);
}

TEST(GroupElement, ProductInverseTrace) {
  const GroupElement x(2, 7, {2, 3, 1, 2});
  const GroupElement xi = inverse(x);
  EXPECT_EQ(mul(x, xi), GroupElement::identity(2, 7));
  EXPECT_EQ(trace(x).value(), 4);
  EXPECT_EQ(x.determinant().value(), 1);
  const GroupElement y(3, 5, {1, 2, 0, 0, 1, 3, 0, 0, 1});
  EXPECT_EQ(mul(y, inverse(y)), GroupElement::identity(3, 5));
  EXPECT_TRUE(y.is_upper_triangular());
  EXPECT_FALSE(y.is_central());
  EXPECT_TRUE(GroupElement(2, 5, {4, 0, 0, 4}).is_central());
}

TEST(GroupElement, RegularSemisimple) {
  EXPECT_TRUE(is_regular_semisimple(GroupElement::diagonal(5, 2)));
  EXPECT_FALSE(is_regular_semisimple(GroupElement(2, 5, {1, 1, 0, 1})));
  EXPECT_FALSE(is_regular_semisimple(GroupElement(2, 5, {4, 1, 0, 4})));
  // diag(1, 2, 4) mod 7 has distinct eigenvalues.
  EXPECT_TRUE(is_regular_semisimple(GroupElement(3, 7, {1, 0, 0, 0, 2, 0, 0, 0, 4})));
  EXPECT_FALSE(is_regular_semisimple(GroupElement::identity(3, 7)));
  EXPECT_FALSE(is_regular_semisimple(GroupElement(3, 7, {1, 1, 0, 0, 1, 0, 0, 0, 1})));
}

TEST(GroupTable, OrdersMatchFormula) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const GroupTable g = enumerate_group(2, p);
    EXPECT_EQ(g.size(), static_cast<std::size_t>(p * (p * p - 1)));
    EXPECT_EQ(g.size(), sl_order_formula(2, p));
  }
  EXPECT_EQ(enumerate_group(3, 3).size(), 5616U);
  EXPECT_EQ(sl_order_formula(3, 3), 5616U);
  EXPECT_EQ(sl_order_formula(3, 5), 372000U);
}

TEST(GroupTable, LookupAndOrdering) {
  const GroupTable g = enumerate_group(2, 5);
  EXPECT_TRUE(std::is_sorted(g.keys().begin(), g.keys().end()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g.index_of(g.element(i)), i);
    EXPECT_EQ(g.product(i, g.inverse(i)), g.identity());
  }
  EXPECT_EQ(g.element(g.identity()), GroupElement::identity(2, 5));
  EXPECT_EQ(g.index_of(GroupElement::identity(2, 7)), kNoIndex);
  EXPECT_THROW(g.element(g.size()), std::out_of_range);
}

TEST(GroupTable, Associativity) {
  const GroupTable g = enumerate_group(2, 3);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      for (std::size_t c = 0; c < g.size(); c += 5)
        ASSERT_EQ(g.product(g.product(a, b), c), g.product(a, g.product(b, c)));
}

TEST(GroupTable, BudgetAndRangeErrors) {
  EXPECT_THROW(enumerate_group(3, 7, 1000), BudgetExceeded);
  EXPECT_THROW(enumerate_group(4, 3), std::invalid_argument);
  EXPECT_THROW(enumerate_group(2, 9), std::invalid_argument);
}

TEST(GroupTable, NonRegularSemisimpleCountAtSeven) {
  const GroupTable g = enumerate_group(2, 7);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < g.size(); ++i) bad += is_regular_semisimple(g.element(i)) ? 0 : 1;
  // 2 central elements plus 4 classes of (p^2 - 1) / 2 unipotent-type elements.
  EXPECT_EQ(bad, 98U);
}

TEST(GroupTable, Centralizers) {
  const GroupTable g = enumerate_group(2, 5);
  EXPECT_EQ(centralizer(g, GroupElement::diagonal(5, 2)).size(), 4U);
  EXPECT_EQ(centralizer(g, GroupElement(2, 5, {1, 1, 0, 1})).size(), 10U);
  EXPECT_EQ(centralizer(g, GroupElement::identity(2, 5)).size(), g.size());
  EXPECT_THROW(centralizer(g, GroupElement::identity(2, 7)), std::invalid_argument);
  // Non-split torus: companion matrix of X^2 - 0 X + 1 over F_7 (-1 is not a square).
  const GroupTable g7 = enumerate_group(2, 7);
  EXPECT_EQ(centralizer(g7, GroupElement(2, 7, {0, 6, 1, 0})).size(), 8U);
  EXPECT_EQ(centralizer(g7, GroupElement::diagonal(7, 3)).size(), 6U);
}

TEST(GroupTable, OrbitStabiliser) {
  for (std::int64_t p : {3, 5, 7}) {
    const GroupTable g = enumerate_group(2, p);
    for (std::size_t i = 0; i < g.size(); i += 7) {
      const GroupElement a = g.element(i);
      EXPECT_EQ(conjugacy_class(g, a).size() * centralizer(g, a).size(), g.size());
    }
  }
}

TEST(GroupTable, BorelAndUnipotent) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const GroupTable b = borel_subgroup(p);
    const GroupTable u = unipotent_subgroup(p);
    EXPECT_EQ(b.size(), static_cast<std::size_t>(p * (p - 1)));
    EXPECT_EQ(u.size(), static_cast<std::size_t>(p));
    const GroupTable g = enumerate_group(2, p);
    EXPECT_EQ(count_distinct_conjugates(g, b), static_cast<std::size_t>(p + 1));
  }
}

TEST(GroupTable, PsiPi) {
  const std::int64_t p = 7;
  for (std::int64_t a = 0; a < p; ++a) {
    EXPECT_EQ(pi(psi(FieldElement(a, p))).value(), 1);
    for (std::int64_t b = 0; b < p; ++b) {
      EXPECT_EQ(mul(psi(FieldElement(a, p)), psi(FieldElement(b, p))), psi(FieldElement(a + b, p)));
    }
  }
  const GroupTable b = borel_subgroup(p);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); j += 3) {
      EXPECT_EQ(pi(b.element(b.product(i, j))), pi(b.element(i)) * pi(b.element(j)));
    }
  }
  EXPECT_THROW(pi(GroupElement(2, 7, {1, 0, 1, 1})), std::invalid_argument);
}

TEST(GroupTable, CommutationIdentity) {
  // x psi(b) = psi(s b) x with s the square of the upper-left entry of x.
  const std::int64_t p = 11;
  const GroupTable bor = borel_subgroup(p);
  for (std::size_t i = 0; i < bor.size(); ++i) {
    const GroupElement x = bor.element(i);
    const FieldElement s = x.at(0, 0) * x.at(0, 0);
    EXPECT_EQ(s, pi(x).pow(2).inv());
    for (std::int64_t b = 0; b < p; ++b) {
      const FieldElement fb(b, p);
      EXPECT_EQ(mul(x, psi(fb)), mul(psi(s * fb), x));
    }
  }
}

TEST(DiagonalisableSet, CountsAndClosure) {
  // 2 + (p - 3)/2 * p (p + 1)
  const std::pair<std::int64_t, std::size_t> expected[] = {{7, 114}, {11, 530}, {13, 912}};
  for (const auto& [p, count] : expected) {
    const GroupTable s = diagonalisable_set(p);
    EXPECT_EQ(s.size(), count);
    const GroupTable g = enumerate_group(2, p);
    for (std::size_t i = 0; i < s.size(); i += 5) {
      const GroupElement x = s.element(i);
      EXPECT_TRUE(s.contains(inverse(x)));
      for (std::size_t j = 0; j < g.size(); j += 37) {
        const GroupElement h = g.element(j);
        EXPECT_TRUE(s.contains(mul(mul(h, x), inverse(h))));
      }
    }
  }
  EXPECT_FALSE(diagonalisable_set(5).is_group());
  EXPECT_THROW(diagonalisable_set(5).product(0, 0), std::logic_error);
}

TEST(ConjugateSubgroup, IsASubgroup) {
  const std::int64_t p = 5;
  const GroupTable g = enumerate_group(2, p);
  const GroupTable b = borel_subgroup(p);
  const GroupElement h(2, p, {0, 4, 1, 0});
  const GroupTable c = conjugate_subgroup(b, h);
  EXPECT_EQ(c.size(), b.size());
  EXPECT_TRUE(c.contains(GroupElement::identity(2, p)));
  EXPECT_FALSE(c.contains(GroupElement(2, p, {1, 1, 0, 1})));
}

TEST(CyclicGroup, Basics) {
  const CyclicGroup z(7);
  EXPECT_EQ(z.product(5, 4), 2U);
  EXPECT_EQ(z.inverse(3), 4U);
  EXPECT_EQ(z.identity(), 0U);
}
