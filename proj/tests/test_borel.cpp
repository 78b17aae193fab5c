#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "progmix/abelian_fourier.hpp"
#include "progmix/borel.hpp"

using namespace progmix;

namespace {

std::vector<GroupFunction> random_signs(const BorelContext& ctx, std::uint64_t seed) {
  Rng rng = substream(seed, 0);
  std::vector<GroupFunction> fs;
  for (int i = 0; i < 4; ++i) fs.push_back(random_sign(ctx.B(), rng));
  return fs;
}

}  // namespace

TEST(Borel, ContextInvariants) {
  for (std::int64_t p : {3, 5, 7, 11}) {
    const BorelContext ctx(p);
    EXPECT_EQ(ctx.B().size(), static_cast<std::size_t>(p * (p - 1)));
    EXPECT_EQ(ctx.U().size(), static_cast<std::size_t>(p));
    for (std::int64_t a = 0; a < p; ++a) EXPECT_EQ(ctx.pi_value(ctx.psi_index(a)), 1);
    for (std::int64_t t = 1; t < p; ++t) EXPECT_EQ(ctx.pi_value(ctx.with_pi(t)), t);
    EXPECT_THROW(ctx.with_pi(0), std::invalid_argument);
  }
}

TEST(Borel, Lambda4Basics) {
  const BorelContext ctx(5);
  const std::vector<GroupFunction> ones(4, GroupFunction::constant(ctx.B(), 1.0));
  EXPECT_DOUBLE_EQ(lambda4_borel(ctx, ones).value, 1.0);
  const auto fs = random_signs(ctx, 109);
  EXPECT_LE(std::abs(lambda4_borel(ctx, fs).value), 1.0);
  const std::vector<GroupFunction> two{fs[0], fs[1], ones[0], ones[0]};
  const std::vector<GroupFunction> pair{fs[0], fs[1]};
  EXPECT_NEAR(lambda4_borel(ctx, two).value, lambda_k(ctx.B(), pair).value, 1e-15);
  EXPECT_THROW(lambda4_borel(ctx, pair), std::invalid_argument);
  const GroupTable other = borel_subgroup(5);
  const std::vector<GroupFunction> foreign(4, GroupFunction::constant(other, 1.0));
  EXPECT_THROW(lambda4_borel(ctx, foreign), std::invalid_argument);
}

TEST(Borel, FourthGap) {
  const BorelContext ctx(7);
  auto fs = random_signs(ctx, 113);
  std::vector<GroupFunction> smooth;
  for (const auto& f : fs) smooth.push_back(coset_smooth(f, ctx.U()));
  EXPECT_LT(theorem_fourth_gap(ctx, smooth), 1e-12);
  // f_2 mean-zero on every coset makes the smoothed form vanish.
  fs[2] = coset_mean_zero_part(ctx, fs[2]);
  EXPECT_LT(coset_mean_defect(ctx, fs[2]), 1e-12);
  EXPECT_NEAR(theorem_fourth_gap(ctx, fs), std::abs(lambda4_borel(ctx, fs).value), 1e-12);
}

TEST(Borel, RewrittenFormMatchesLambda4) {
  for (std::int64_t p : {3, 5, 7}) {
    const BorelContext ctx(p);
    const std::vector<GroupFunction> ones(4, GroupFunction::constant(ctx.B(), 1.0));
    EXPECT_NEAR(rewritten_form(ctx, ones).value, 1.0, 1e-15);
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
      Rng rng = substream(127, trial);
      std::vector<GroupFunction> fs;
      for (int i = 0; i < 4; ++i) fs.push_back(random_uniform(ctx.B(), rng));
      EXPECT_NEAR(rewritten_form(ctx, fs).value, lambda4_borel(ctx, fs).value, 1e-10);
    }
  }
}

TEST(Borel, RewrittenFormExactOnIndicators) {
  const BorelContext ctx(5);
  Rng rng = substream(131, 0);
  std::vector<GroupFunction> fs;
  for (int i = 0; i < 4; ++i) fs.push_back(random_indicator(ctx.B(), rng, 0.6));
  const MixingResult a = rewritten_form(ctx, fs);
  const MixingResult b = lambda4_borel(ctx, fs);
  ASSERT_TRUE(a.exact_count && b.exact_count);
  EXPECT_EQ(*a.exact_count, *b.exact_count * 25);
  EXPECT_THROW(rewritten_form(ctx, fs, 1000), BudgetExceeded);
}

TEST(Borel, ZeroFrequencyFunctional) {
  const BorelContext ctx(5);
  auto fs = random_signs(ctx, 137);
  EXPECT_THROW(zero_freq_functional(ctx, fs, 3), std::invalid_argument);
  EXPECT_THROW(zero_freq_functional(ctx, fs, 1), std::invalid_argument);
  fs[3] = coset_mean_zero_part(ctx, fs[3]);
  EXPECT_GE(zero_freq_functional(ctx, fs, 3), 0.0);
  fs[2] = coset_mean_zero_part(ctx, fs[2]);
  EXPECT_GE(zero_freq_functional(ctx, fs, 2), 0.0);
  // Coset-constant f_1, f_2 and f_3 = 0.
  std::vector<GroupFunction> flat;
  for (const auto& f : fs) flat.push_back(coset_smooth(f, ctx.U()));
  flat[3] = GroupFunction::zeros(ctx.B());
  EXPECT_EQ(zero_freq_functional(ctx, flat, 3), 0.0);
}

TEST(Borel, FibreSpectrumDependsOnlyOnPi) {
  const BorelContext ctx(7);
  Rng rng = substream(139, 0);
  const GroupFunction f = random_uniform(ctx.B(), rng);
  for (std::size_t x = 0; x < ctx.B().size(); x += 5) {
    AbelianFunction a, b;
    const auto fx = fibre_restriction(ctx, f, x);
    const auto fy = fibre_restriction(ctx, f, ctx.psi_times(3, x));
    a.values.assign(fx.begin(), fx.end());
    b.values.assign(fy.begin(), fy.end());
    const Spectrum sa = dft(a), sb = dft(b);
    for (std::size_t xi = 0; xi < 7; ++xi) {
      EXPECT_NEAR(std::abs(sa.coefficients[xi]), std::abs(sb.coefficients[xi]), 1e-12);
    }
  }
}

TEST(Borel, SumProductFunctional) {
  for (std::int64_t p : {3, 5, 7, 13}) {
    const std::vector<std::int64_t> zero(static_cast<std::size_t>(p), 0);
    EXPECT_EQ(sum_product_functional(p, zero, zero, zero), BigRational(1));
    const std::vector<std::int64_t> c(static_cast<std::size_t>(p), 1);
    // Roots of t^4 + t^2 + 1 in F^x: 2, 0, 4, 4.
    const std::int64_t roots = p == 3 ? 2 : p == 5 ? 0 : 4;
    EXPECT_EQ(sum_product_functional(p, zero, zero, c), BigRational(roots, p - 1));
  }
  Rng rng = substream(149, 0);
  std::vector<std::int64_t> e1(13), e2(13), e3(13);
  for (std::size_t i = 0; i < 13; ++i) {
    e1[i] = static_cast<std::int64_t>(uniform_index(rng, 13));
    e2[i] = static_cast<std::int64_t>(uniform_index(rng, 13));
    e3[i] = 1 + static_cast<std::int64_t>(uniform_index(rng, 12));
  }
  EXPECT_LE(sum_product_functional(13, e1, e2, e3).to_double(), 0.25);
  EXPECT_THROW(sum_product_functional(13, e1, e2, std::vector<std::int64_t>(3)), std::invalid_argument);
}

TEST(Borel, EliminationConstants) {
  const EliminationConstants c = elimination_constants(BigRational(2), BigRational(2));
  EXPECT_EQ(c.lhs.str(), "-1959768581763228064778880");
  EXPECT_EQ(c.rhs.str(), "69308789034402847137600");
  EXPECT_EQ(c.alpha(1), BigRational(17));
  EXPECT_EQ(c.beta_prime(-1), BigRational(-9, 4));
  const auto [l, r] = alpha_identity(c, 1);
  EXPECT_EQ(l, BigRational(-720));
  EXPECT_EQ(r, BigRational(-720));
  for (int j = 0; j <= 2; ++j) {
    const auto [a, b] = alpha_identity(c, j);
    EXPECT_EQ(a, b);
  }
  EXPECT_THROW(c.alpha(6), std::out_of_range);
  EXPECT_THROW(alpha_identity(c, 3), std::out_of_range);
}

TEST(Borel, BetaPrimeClosedForm) {
  const BigRational r(3), t(5);
  const EliminationConstants c = elimination_constants(r, t);
  for (int j = 0; j <= 5; ++j) EXPECT_EQ(c.beta_prime(j), beta_prime_closed_form(r, t, j));
  const EliminationConstants q = elimination_constants(BigRational(2, 3), BigRational(-1, 2));
  for (int j = -1; j <= 5; ++j) EXPECT_EQ(q.beta_prime(j), beta_prime_closed_form(q.r, q.t, j));
  EXPECT_THROW(elimination_constants(BigRational(0), t), std::invalid_argument);
  EXPECT_THROW(elimination_constants(BigRational(1), t), std::invalid_argument);
  EXPECT_THROW(elimination_constants(BigRational(-1), t), std::invalid_argument);
}

TEST(Borel, ConicFrozenValues) {
  struct Case {
    std::int64_t p, k;
    std::size_t size;
    std::uint64_t energy;
  };
  for (const Case& c : {Case{5, 2, 6, 90}, Case{7, 2, 8, 168}, Case{7, 3, 6, 90}, Case{13, 2, 14, 546},
                        Case{31, 2, 32, 2976}}) {
    const ConicReport r = conic_analysis(c.p, c.k);
    EXPECT_EQ(r.conic_size, c.size);
    EXPECT_EQ(r.energy, c.energy);
    EXPECT_EQ(r.max_representations, c.size);
    EXPECT_EQ(r.max_point[0], 1);
    EXPECT_EQ(r.max_point[1], 0);
  }
}

TEST(Borel, ConicAllParameters) {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    for (std::int64_t k = 2; k < p; ++k) {
      const ConicReport r = conic_analysis(p, k);
      EXPECT_GE(r.conic_size + 1, static_cast<std::size_t>(p));
      EXPECT_LE(r.conic_size, static_cast<std::size_t>(p + 1));
      EXPECT_TRUE(r.parametrisation_on_conic);
      EXPECT_LE(r.max_fibre, 2U);
      EXPECT_LE(r.max_representations_off_centre, 2U);
      EXPECT_LE(r.energy, 3 * r.conic_size * r.conic_size);
      EXPECT_LE(r.degenerate_t, 4U);
    }
  }
  EXPECT_THROW(conic_analysis(7, 0), std::invalid_argument);
  EXPECT_THROW(conic_analysis(7, 1), std::invalid_argument);
  EXPECT_THROW(conic_analysis(7, 8), std::invalid_argument);
}

TEST(Borel, HInvariance) {
  const BorelContext ctx(7);
  Rng rng = substream(151, 0);
  const GroupFunction f = random_uniform(ctx.B(), rng);
  const HInvarianceReport r = h_invariance_check(ctx, f, 100, 3);
  EXPECT_EQ(r.trials, 100U);
  EXPECT_EQ(r.failures, 0U);
  EXPECT_LE(r.max_difference, 1e-10);
}
