#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "progmix/measures.hpp"

using namespace progmix;

TEST(Measures, MuBhIsAProbabilityMeasure) {
  for (std::int64_t p : {3, 5}) {
    const GroupTable g = enumerate_group(2, p);
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
      Rng rng = substream(101, trial);
      const GroupElement b = g.element(uniform_index(rng, g.size()));
      const GroupElement h = g.element(uniform_index(rng, g.size()));
      const Measure mu = mu_bh(g, b, h);
      EXPECT_NEAR(mu.total_mass(), 1.0, 1e-12);
      const auto counts = phi_fibre_histogram(g, b, h);
      const std::uint64_t z = centralizer(g, b).size();
      EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}), g.size() * z);
      for (std::size_t y = 0; y < g.size(); ++y) {
        EXPECT_EQ(mu[y], static_cast<double>(counts[y]) / static_cast<double>(g.size() * z));
      }
    }
  }
}

TEST(Measures, MuBhAtIdentityForNonsplitTorusAtThree) {
  const GroupTable g = enumerate_group(2, 3);
  const GroupElement b(2, 3, {0, 2, 1, 0});
  ASSERT_TRUE(is_regular_semisimple(b));
  const Measure mu = mu_bh(g, b, GroupElement::identity(2, 3));
  // 56 of the 96 pairs (g, c) land on the identity.
  EXPECT_NEAR(mu[g.identity()], 7.0 / 12.0, 1e-15);
}

TEST(Measures, MuBhErrors) {
  const GroupTable g = enumerate_group(2, 3);
  EXPECT_THROW(mu_bh(g, GroupElement::identity(2, 5), GroupElement::identity(2, 3)), std::invalid_argument);
  EXPECT_THROW(mu_bh(g, GroupElement::identity(2, 3), GroupElement::identity(2, 3), 100), BudgetExceeded);
  EXPECT_THROW(Measure(GroupFunction::constant(g, -1.0)), std::invalid_argument);
}

TEST(Measures, HeavyMassExamples) {
  const GroupTable g = enumerate_group(2, 5);
  const Measure uniform(GroupFunction::uniform(g));
  EXPECT_NEAR(heavy_mass(uniform, 1.0), 1.0, 1e-12);
  EXPECT_EQ(heavy_mass(uniform, 2.0), 0.0);
  const Measure delta(GroupFunction::delta(g, 4));
  EXPECT_EQ(heavy_mass(delta, 1.0), 1.0);
  EXPECT_EQ(heavy_mass(delta, static_cast<double>(g.size())), 1.0);
  EXPECT_THROW(heavy_mass(uniform, 0.5), std::invalid_argument);

  Rng rng = substream(103, 0);
  const Measure mu(random_probability(g, rng));
  double last = 1.0 + 1e-12;
  for (double c0 = 1.0; c0 <= 8.0; c0 += 0.5) {
    const double h = heavy_mass(mu, c0);
    EXPECT_LE(h, last);
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, mu.total_mass() + 1e-12);
    last = h;
  }
}

TEST(Measures, ExactHeavyMassAverageAtThree) {
  // Average over all |G|^2 pairs, frozen from an independent exhaustive oracle.
  const GroupTable g = enumerate_group(2, 3);
  double s = 0.0;
  for (std::size_t b = 0; b < g.size(); ++b)
    for (std::size_t h = 0; h < g.size(); ++h) s += heavy_mass(mu_bh(g, g.element(b), g.element(h)), 4.0);
  EXPECT_NEAR(s / static_cast<double>(g.size() * g.size()), 55.0 / 288.0, 1e-12);
}

TEST(Measures, PropGenRhs) {
  const GroupTable g = enumerate_group(2, 3);
  const PropGenEstimate a = prop_gen_rhs(g, 4.0, 1.0, 50, 7);
  const PropGenEstimate b = prop_gen_rhs(g, 4.0, 1.0, 50, 7);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.samples, 50U);
  EXPECT_GT(a.standard_error, 0.0);
  EXPECT_NEAR(a.value, std::pow(4.0 + a.heavy_mean, 0.25), 1e-15);
  const PropGenEstimate inf = prop_gen_rhs(g, 4.0, 1e300, 50, 7);
  EXPECT_NEAR(inf.value, std::pow(a.heavy_mean, 0.25), 1e-12);
  EXPECT_THROW(prop_gen_rhs(g, 4.0, 1.0, 0, 7), std::invalid_argument);
}

TEST(Measures, YSet) {
  for (std::int64_t p : {5, 7}) {
    const GroupTable g = enumerate_group(2, p);
    const GroupElement b = GroupElement::diagonal(p, 2);
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
      Rng rng = substream(107, trial);
      const GroupElement h = g.element(uniform_index(rng, g.size()));
      const GroupTable y = y_set(g, b, h);
      EXPECT_TRUE(y.contains(GroupElement::identity(2, p)));
      EXPECT_LE(y.size(), static_cast<std::size_t>(4 * p));
    }
  }
  const GroupTable g = enumerate_group(2, 5);
  EXPECT_THROW(y_set(g, GroupElement(2, 5, {1, 1, 0, 1}), GroupElement::identity(2, 5)),
               std::invalid_argument);
}

TEST(Measures, ClassAverageIdentity) {
  for (std::int64_t p : {3, 5}) {
    const GroupTable g = enumerate_group(2, p);
    const ClassAverageReport r = class_average_identity_check(g, unipotent_subgroup(p));
    EXPECT_LE(r.max_abs_difference, 1e-12);
    EXPECT_NEAR(r.lhs_mass, 1.0, 1e-12);
    EXPECT_NEAR(r.rhs_mass, 1.0, 1e-12);
  }
  const GroupTable g = enumerate_group(2, 3);
  const GroupTable trivial(2, 3, {GroupElement::identity(2, 3)}, TableKind::kConjugateSubgroup);
  const ClassAverageReport r = class_average_identity_check(g, trivial);
  for (std::size_t y = 0; y < g.size(); ++y) {
    const double expected = y == g.identity() ? 1.0 : 0.0;
    EXPECT_EQ(r.lhs[y], expected);
    EXPECT_EQ(r.rhs[y], expected);
  }
}
