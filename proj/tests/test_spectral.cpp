#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "progmix/spectral.hpp"

using namespace progmix;

namespace {

// max over nontrivial characters of |sum_z mu(z) e(-xi z / n)|.
double character_oracle(const GroupFunction& mu) {
  const std::size_t n = mu.size();
  double best = 0.0;
  for (std::size_t xi = 1; xi < n; ++xi) {
    std::complex<double> s = 0.0;
    for (std::size_t z = 0; z < n; ++z) {
      s += mu[z] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(xi * z) / static_cast<double>(n));
    }
    best = std::max(best, std::abs(s));
  }
  return best;
}

}  // namespace

TEST(Spectral, CyclicGroupMatchesCharacters) {
  for (std::size_t n = 2; n <= 16; ++n) {
    const CyclicGroup z(n);
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
      Rng rng = substream(n, trial);
      const GroupFunction mu = random_uniform(z, rng);
      EXPECT_NEAR(spectral_norm(mu).norm, character_oracle(mu), 1e-8) << "n=" << n;
      EXPECT_NEAR(spectral_norm(mu, SpectralMethod::kPowerIteration).norm, character_oracle(mu), 1e-6)
          << "n=" << n;
    }
  }
}

TEST(Spectral, DeltaAndUniform) {
  for (std::int64_t p : {3, 5}) {
    const GroupTable g = enumerate_group(2, p);
    for (SpectralMethod m : {SpectralMethod::kFullSvd, SpectralMethod::kPowerIteration}) {
      EXPECT_NEAR(spectral_norm(GroupFunction::delta(g, 5), m).norm, 1.0, 1e-10);
      EXPECT_NEAR(spectral_norm(GroupFunction::uniform(g), m).norm, 0.0, 1e-10);
    }
  }
}

TEST(Spectral, MethodsAgree) {
  const GroupTable g = enumerate_group(2, 5);
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    Rng rng = substream(71, trial);
    const GroupFunction mu = random_probability(g, rng);
    const SpectralEstimate a = spectral_norm(mu);
    const SpectralEstimate b = spectral_norm(mu, SpectralMethod::kPowerIteration);
    EXPECT_EQ(a.method, SpectralMethod::kFullSvd);
    EXPECT_EQ(b.method, SpectralMethod::kPowerIteration);
    EXPECT_LE(b.residual, 1e-8);
    EXPECT_NEAR(a.norm, b.norm, 1e-6 * std::max(1.0, a.norm));
  }
}

TEST(Spectral, Errors) {
  const CyclicGroup big(kFullSvdMaxOrder + 1);
  EXPECT_THROW(spectral_norm(GroupFunction::delta(big, 0)), std::invalid_argument);
  const GroupTable g = enumerate_group(2, 5);
  Rng rng = substream(73, 0);
  const GroupFunction mu = random_uniform(g, rng);
  PowerIterationOptions opt;
  opt.max_iterations = 2;
  opt.tolerance = 1e-15;
  EXPECT_THROW(spectral_norm(mu, SpectralMethod::kPowerIteration, opt), std::runtime_error);
  EXPECT_THROW(QuasirandomnessParameter::configured(0.5), std::invalid_argument);
  EXPECT_DOUBLE_EQ(QuasirandomnessParameter::classical_sl2(5).D, 2.0);
  EXPECT_THROW(QuasirandomnessParameter::classical_sl2(4), std::invalid_argument);
}

TEST(Spectral, BoundsOnRandomProbabilityMeasures) {
  const GroupTable g = enumerate_group(2, 5);
  const auto D = QuasirandomnessParameter::classical_sl2(5);
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Rng rng = substream(79, trial);
    const SpectralBoundsReport r = check_spectral_bounds(random_probability(g, rng), D, 4.0);
    EXPECT_TRUE(r.all_hold()) << "trial " << trial;
    EXPECT_LE(r.norm, 1.0 + 1e-12);
  }
  EXPECT_THROW(check_spectral_bounds(GroupFunction::uniform(g), D, 0.5), std::invalid_argument);
}

TEST(Spectral, BabaiNikolovPyber) {
  const GroupTable g = enumerate_group(2, 5);
  const auto D = QuasirandomnessParameter::classical_sl2(5);
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng = substream(83, trial);
    const GroupFunction f1 = random_uniform(g, rng).minus_mean();
    const GroupFunction f2 = random_uniform(g, rng);
    EXPECT_TRUE(check_bnp_inequality(f1, f2, D).holds());
    EXPECT_TRUE(check_bnp_inequality(f2, f1, D).holds());
  }
  const GroupFunction one = GroupFunction::constant(g, 1.0);
  EXPECT_THROW(check_bnp_inequality(one, one, D), std::invalid_argument);
}

TEST(Spectral, QuasirandomMixing) {
  for (std::int64_t p : {3, 5, 7}) {
    const GroupTable g = enumerate_group(2, p);
    const auto D = QuasirandomnessParameter::classical_sl2(p);
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
      Rng rng = substream(89, trial);
      const InequalityCheck c = check_quasmix(random_sign(g, rng), random_uniform(g, rng), D);
      EXPECT_TRUE(c.holds()) << "p=" << p << " lhs=" << c.lhs << " rhs=" << c.rhs;
    }
  }
}

TEST(Spectral, TTStar) {
  const GroupTable g = enumerate_group(2, 3);
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng = substream(97, trial);
    EXPECT_LT(tt_star_check(random_probability(g, rng)).relative_difference(), 1e-6);
  }
  const GroupFunction mu = GroupFunction::delta(g, 3);
  const GroupFunction r = reflect(mu);
  EXPECT_DOUBLE_EQ(r[g.inverse(3)], 1.0);
}

TEST(Spectral, UnipotentClassNorms) {
  // Frozen from an independent dense numpy SVD.
  const ClassExpansionReport r = class_expansion({3, 5, 7}, ClassSelector::unipotent());
  ASSERT_EQ(r.rows.size(), 3U);
  EXPECT_EQ(r.rows[0].class_size, 4U);
  EXPECT_EQ(r.rows[1].class_size, 12U);
  EXPECT_EQ(r.rows[2].class_size, 24U);
  EXPECT_NEAR(r.rows[0].norm, 4.0, 1e-9);
  EXPECT_NEAR(r.rows[1].norm, 9.708203932499373, 1e-9);
  EXPECT_NEAR(r.rows[2].norm, 11.31370849898478, 1e-9);
  EXPECT_GT(r.exponent(), 0.0);
}

TEST(Spectral, SplitTorusClasses) {
  const ClassExpansionReport r = class_expansion({5, 7, 11}, ClassSelector::split_torus(2));
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.class_size, static_cast<std::size_t>(row.p * (row.p + 1)));
    EXPECT_LE(row.ratio, 1.0 + 1e-12);
  }
  EXPECT_THROW(class_expansion({5}, ClassSelector::split_torus(1)), std::invalid_argument);
  EXPECT_THROW(class_expansion({5}, ClassSelector::split_torus(4)), std::invalid_argument);
}
